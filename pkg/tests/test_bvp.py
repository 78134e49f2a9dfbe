import math

import numpy as np
import pytest

from gentrig import bvp, gtf
from gentrig.bvp import BvpSpec, NonlocalSpec
from gentrig.errors import DomainError


class TestSpecs:
    def test_bvp_spec_validation(self):
        with pytest.raises(DomainError):
            BvpSpec(H=-1.0, p=2.0, q=2.0)
        with pytest.raises(DomainError):
            BvpSpec(H=1.0, p=1.0, q=2.0)

    def test_nonlocal_spec_validation(self):
        with pytest.raises(DomainError):
            NonlocalSpec(H=1.0, m=0.0)

    def test_nonlocal_exponent_map(self):
        # m = sqrt(3)/2 gives sqrt(m^2 + 1/4) = 1 and hence r = 4/3
        spec = NonlocalSpec(H=1.0, m=math.sqrt(3.0) / 2.0)
        assert spec.r == pytest.approx(4.0 / 3.0, rel=1e-14)
        assert 1.0 < NonlocalSpec(H=1.0, m=10.0).r < 2.0


class TestGeneralSolution:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
    @pytest.mark.parametrize("q", [1.5, 2.0, 3.0, 4.0])
    @pytest.mark.parametrize("H", [1.0, 2.5])
    def test_ode_residual(self, p, q, H):
        sol = bvp.solve_general(BvpSpec(H=H, p=p, q=q))
        xs = np.linspace(0.0, H, 35)[1:-1]
        res = np.array([bvp.residual_general(sol, x) for x in xs])
        assert np.max(np.abs(res)) <= 1e-6

    def test_boundary_values(self):
        sol = bvp.solve_general(BvpSpec(H=2.5, p=3.0, q=1.5))
        assert sol(0.0) == pytest.approx(0.0, abs=1e-12)
        assert sol(2.5) == pytest.approx(0.0, abs=1e-12)

    def test_positive_inside(self):
        sol = bvp.solve_general(BvpSpec(H=1.0, p=2.0, q=3.0))
        xs = np.linspace(0.0, 1.0, 33)[1:-1]
        assert np.all(sol(xs) > 0.0)

    @pytest.mark.parametrize("p,q,H", [(1.5, 3.0, 1.0), (4.0, 2.0, 2.5)])
    def test_phase_curve(self, p, q, H):
        sol = bvp.solve_general(BvpSpec(H=H, p=p, q=q))
        xs = np.linspace(0.0, H, 21)[1:-1]
        res = np.array([bvp.phase_curve_residual(sol, x) for x in xs])
        assert np.max(np.abs(res)) <= 1e-9

    def test_classical_case(self):
        # p = q = 2, H = 1: u(x) = sin(pi x)/(2 pi)
        sol = bvp.solve_general(BvpSpec(H=1.0, p=2.0, q=2.0))
        xs = np.linspace(0.0, 1.0, 33)
        expected = np.sin(math.pi * xs) / (2.0 * math.pi)
        assert np.max(np.abs(sol(xs) - expected)) <= 1e-11

    def test_domain(self):
        sol = bvp.solve_general(BvpSpec(H=1.0, p=2.0, q=2.0))
        with pytest.raises(DomainError):
            sol(1.5)


class TestEqualParameters:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_matches_general_on_half_interval(self, p):
        eq = bvp.solve_pq_equal(p)
        gen = bvp.solve_general(BvpSpec(H=1.0, p=p, q=p))
        xs = np.linspace(0.0, 0.5, 17)
        assert np.max(np.abs(eq(xs) - gen(xs))) <= 1e-13

    def test_symmetry(self):
        eq = bvp.solve_pq_equal(3.0)
        xs = np.linspace(0.0, 1.0, 21)
        assert np.max(np.abs(eq(xs) - eq(1.0 - xs))) <= 1e-13

    def test_classical(self):
        eq = bvp.solve_pq_equal(2.0)
        xs = np.linspace(0.0, 1.0, 33)
        assert np.max(
            np.abs(eq(xs) - np.sin(math.pi * xs) / (2.0 * math.pi))
        ) <= 1e-11


class TestNonlocal:
    @pytest.mark.parametrize("m", [0.5, 1.0, 2.0, 10.0])
    def test_closure_relation(self, m):
        # the squared-slope integral must reproduce m^2
        spec = NonlocalSpec(H=1.0, m=m)
        phi = bvp.solve_nonlocal(spec)
        got = bvp.nonlocal_mean_square_slope(phi)
        assert got == pytest.approx(m * m, rel=1e-6)

    def test_closure_other_length(self):
        spec = NonlocalSpec(H=2.5, m=1.0)
        phi = bvp.solve_nonlocal(spec)
        assert bvp.nonlocal_mean_square_slope(phi) == pytest.approx(1.0, rel=1e-6)

    def test_boundary(self):
        phi = bvp.solve_nonlocal(NonlocalSpec(H=1.0, m=1.0))
        assert phi(0.0) == pytest.approx(0.0, abs=1e-12)
        assert phi(1.0) == pytest.approx(0.0, abs=1e-12)

    def test_scaling_vs_general(self):
        # the profile is 2 sqrt(m^2 + 1/4) times the general solution
        # with p = r* and q = r
        spec = NonlocalSpec(H=1.0, m=2.0)
        phi = bvp.solve_nonlocal(spec)
        base = bvp.solve_general(BvpSpec(H=1.0, p=gtf.conjugate(spec.r), q=spec.r))
        scale = 2.0 * math.sqrt(spec.m**2 + 0.25)
        xs = np.linspace(0.0, 1.0, 17)
        assert np.max(np.abs(phi(xs) - scale * base(xs))) <= 1e-13

    def test_residual(self):
        phi = bvp.solve_nonlocal(NonlocalSpec(H=1.0, m=1.0))
        xs = np.linspace(0.0, 1.0, 11)[1:-1]
        res = np.array([bvp.residual_nonlocal(phi, x) for x in xs])
        assert np.max(np.abs(res)) <= 1e-5
