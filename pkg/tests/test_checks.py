import random

import pytest

from schroeter.checks import (
    chasles_check,
    chord_tangency_check,
    conjugate_lines_check,
    tangency_transport_check,
    tangent_by_involution,
    tangent_meet_check,
)
from schroeter.cubic import tangent_at
from schroeter.engine import PointPair, run
from schroeter.errors import HypothesisFailed, LinesNotDistinct, NotCollinear
from schroeter.projective import ProjPoint
from schroeter.verify import run_suites
from schroeter.weierstrass import multiply


def pt(x, y):
    return ProjPoint.affine(x, y)


GOLDEN = ProjPoint.of(4, 23, 64)  # (1/16, 23/64)


@pytest.fixture
def curve12_pairs():
    return {
        "p": PointPair.of(pt(1, 2), pt(2, -4)),
        "q": PointPair.of(pt(2, 4), pt(1, -2)),
        "s": PointPair.of(GOLDEN, pt(32, -184)),
    }


class TestChasles:
    def test_torsion_hexagon(self, curve54):
        assert chasles_check(
            curve54.cubic,
            pt(2, 6), pt(-2, 2), pt(-1, 0),
            pt(2, -6), pt(-2, -2), pt(-4, 0),
        )
        # all three opposite-side meets stay in the torsion set
        from schroeter.projective import join, meet

        m3 = meet(join(pt(-1, 0), pt(2, -6)), join(pt(-4, 0), pt(2, 6)))
        assert m3 == pt(-2, 2)

    def test_vacuous_when_hypothesis_fails(self, curve12):
        # points paired so the first meet misses the curve
        a, b, c = pt(1, 2), pt(2, 4), pt(32, -184)
        abar, bbar, cbar = pt(1, -2), pt(2, -4), GOLDEN
        assert chasles_check(curve12.cubic, a, b, c, abar, bbar, cbar)

    def test_engine_rederivation(self, golden_frame_seed):
        state = run(golden_frame_seed, max_points=40)
        report = run_suites(state, suites=("chasles",))
        assert report.ok
        assert any(r.status == "pass" for r in report.results)


class TestTangentMeet:
    def test_golden_configuration(self, curve12, curve12_pairs):
        p, pbar = curve12_pairs["p"].points
        q, qbar = curve12_pairs["q"].points
        assert tangent_meet_check(curve12.cubic, p, pbar, q, qbar)

    def test_hypothesis_failure_detected(self, curve12):
        # (1,2) with a non-conjugate partner: the meets leave the curve
        with pytest.raises(HypothesisFailed):
            tangent_meet_check(curve12.cubic, pt(1, 2), pt(1, -2), pt(2, 4), pt(2, -4))

    def test_torsion_pairs(self, curve54):
        assert tangent_meet_check(curve54.cubic, pt(2, 6), pt(2, -6), pt(-2, 2), pt(-2, -2))


class TestTangencyTransport:
    def test_golden_configuration(self, curve12):
        assert tangency_transport_check(curve12.cubic, pt(1, 2), pt(2, -4), pt(2, 4))

    def test_coincident_q_uses_tangent(self, curve12):
        assert tangency_transport_check(curve12.cubic, pt(1, 2), pt(2, -4), pt(1, 2))

    def test_torsion_instance(self, curve54):
        assert tangency_transport_check(curve54.cubic, pt(2, 6), pt(2, -6), pt(-1, 0))

    def test_hypothesis_failure(self, curve12):
        with pytest.raises(HypothesisFailed):
            tangency_transport_check(curve12.cubic, pt(1, 2), pt(2, 4), pt(2, -4))


class TestTangentByInvolution:
    def test_golden_tangent(self, curve12, curve12_pairs):
        line = tangent_by_involution(
            curve12.cubic, curve12_pairs["s"], curve12_pairs["p"], curve12_pairs["q"],
            contact=GOLDEN,
        )
        assert line == tangent_at(curve12.cubic, GOLDEN)

    def test_all_contacts_across_pairs(self, curve12, curve12_pairs):
        # (32,-184) lies on the chord through both members of the p pair, so
        # that contact is degenerate; every admissible one must match exactly
        pairs = list(curve12_pairs.values())
        matched = 0
        for i, s_pair in enumerate(pairs):
            others = [p for j, p in enumerate(pairs) if j != i]
            for contact in s_pair.points:
                try:
                    line = tangent_by_involution(
                        curve12.cubic, s_pair, others[0], others[1], contact=contact
                    )
                except LinesNotDistinct:
                    continue
                assert line == tangent_at(curve12.cubic, contact)
                matched += 1
        assert matched >= 4

    def test_torsion_collinearity_detected(self, curve54):
        s_pair = PointPair.of(pt(2, 6), pt(2, -6))
        p_pair = PointPair.of(pt(-2, 2), pt(-2, -2))
        q_pair = PointPair.of(pt(-1, 0), pt(-4, 0))
        with pytest.raises(LinesNotDistinct):
            tangent_by_involution(curve54.cubic, s_pair, p_pair, q_pair, contact=pt(2, 6))

    def test_torsion_alternative_pairing_works(self, curve54):
        s_pair = PointPair.of(pt(2, 6), pt(2, -6))
        to_pair = PointPair.of(ProjPoint.of(0, 0, 1), ProjPoint.of(0, 1, 0))
        q_pair = PointPair.of(pt(-1, 0), pt(-4, 0))
        line = tangent_by_involution(curve54.cubic, s_pair, to_pair, q_pair, contact=pt(2, 6))
        assert line == tangent_at(curve54.cubic, pt(2, 6))

    def test_contact_line_through_contact(self, curve12, curve12_pairs):
        from schroeter.projective import incident

        line = tangent_by_involution(
            curve12.cubic, curve12_pairs["s"], curve12_pairs["p"], curve12_pairs["q"],
            contact=GOLDEN,
        )
        assert incident(GOLDEN, line)


class TestChordTangency:
    def test_golden_instance(self, curve12):
        # chord through (1,2) and its conjugate hits (32,-184); its conjugate
        # is the common tangential point (1/16, 23/64)
        assert chord_tangency_check(curve12, pt(1, 2), pt(32, -184))

    def test_torsion_instance(self, curve54):
        assert chord_tangency_check(curve54, pt(-1, 0), pt(0, 0))

    def test_not_collinear(self, curve12):
        with pytest.raises(NotCollinear):
            chord_tangency_check(curve12, pt(1, 2), pt(2, 4))


class TestConjugateLines:
    def test_two_torsion_carrier(self, curve12, curve12_pairs):
        r = ProjPoint.of(0, 0, 1)
        assert conjugate_lines_check(
            curve12.cubic, r, curve12_pairs["p"], curve12_pairs["s"], curve12_pairs["q"]
        )

    def test_carrier_in_pair_rejected(self, curve12, curve12_pairs):
        with pytest.raises(LinesNotDistinct):
            conjugate_lines_check(
                curve12.cubic, pt(1, 2), curve12_pairs["p"], curve12_pairs["q"],
                curve12_pairs["s"],
            )

    def test_random_carriers(self, curve12, curve12_pairs):
        base = pt(1, 2)
        members = {p for pair in curve12_pairs.values() for p in pair.points}
        hits = 0
        for n in range(3, 30):
            r = multiply(curve12, n, base)
            if r in members or r.is_infinite:
                continue
            try:
                ok = conjugate_lines_check(
                    curve12.cubic, r,
                    curve12_pairs["p"], curve12_pairs["q"], curve12_pairs["s"],
                )
            except LinesNotDistinct:
                continue
            assert ok
            hits += 1
            if hits >= 10:
                break
        assert hits >= 10
