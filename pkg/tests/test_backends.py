"""Agreement between the compiled extension and the pure-Python fallback."""

import numpy as np
import pytest

from twographs import _kernels_py as pure
from twographs.canon import descendant
from twographs.graphs import named_figure, paley_conference_seidel

from conftest import random_graph

compiled = pytest.importorskip("twographs._kernels")


class TestJacobi:
    def test_eigvals_agree(self, rng):
        for _ in range(40):
            n = rng.randint(1, 14)
            a = np.array(
                [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)],
                dtype=float,
            )
            a = (a + a.T) / 2
            va, ra = compiled.jacobi_eigvals(a)
            vb, rb = pure.jacobi_eigvals(a)
            assert np.allclose(va, vb, atol=1e-12)
            assert ra < 1e-12 * max(1.0, np.linalg.norm(a))

    def test_eigh_reconstructs(self, rng):
        for backend in (compiled, pure):
            a = np.array(
                [[rng.randint(-4, 4) for _ in range(8)] for _ in range(8)],
                dtype=float,
            )
            a = (a + a.T) / 2
            vals, vecs, _ = backend.jacobi_eigh(a)
            assert np.allclose(vecs @ np.diag(vals) @ vecs.T, a, atol=1e-10)
            assert np.allclose(vecs.T @ vecs, np.eye(8), atol=1e-10)
            assert all(x >= y for x, y in zip(vals, vals[1:]))


class TestSweeps:
    def test_norm_sweeps_agree(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 9))
            s = g.seidel().entries.astype(float)
            m = rng.randint(1, g.n)
            c = 1.0 / (g.n - 1)
            p = rng.choice([0.0, 2.0, 4.5])
            a = compiled.sweep_norms(s, m, c, p, 2)
            b = pure.sweep_norms(s, m, c, p, 1)
            assert all(abs(x - y) < 1e-12 for x, y in zip(a, b))

    def test_value_sweeps_agree(self, rng):
        g = random_graph(rng, 8)
        s = g.seidel().entries.astype(float)
        for m in range(1, 9):
            va = compiled.sweep_values(s, m, 1 / 7)
            vb = pure.sweep_values(s, m, 1 / 7)
            assert np.allclose(va, vb, atol=1e-12)

    def test_thread_count_changes_nothing(self):
        s = paley_conference_seidel(25).entries.astype(float)
        results = [
            compiled.sweep_norms(s, 5, 1 / 25, 3.0, t) for t in (1, 2, 3, 4)
        ]
        for other in results[1:]:
            assert other == results[0]  # bitwise identical


class TestCanonical:
    def test_random_graphs(self, rng):
        for _ in range(150):
            n = rng.randint(2, 16)
            g = random_graph(rng, n)
            assert compiled.canonical_bytes(g.masks, n) == pure.canonical_bytes(
                g.masks, n
            )

    def test_strongly_regular_descendants(self):
        g = paley_conference_seidel(25).to_graph()
        for v in (0, 7):
            d = descendant(g, v)
            assert compiled.canonical_bytes(d.masks, d.n) == pure.canonical_bytes(
                d.masks, d.n
            )

    def test_figures(self):
        for name in ("x1_6", "x2_6", "y1", "y2", "y3"):
            g = named_figure(name)
            assert compiled.canonical_bytes(g.masks, g.n) == pure.canonical_bytes(
                g.masks, g.n
            )


class TestOrbits:
    @pytest.mark.parametrize("nv", [1, 2, 3, 4, 5, 6])
    def test_reps_and_sizes_agree(self, nv):
        ra, sa = compiled.orbit_reps(nv)
        rb, sb = pure.orbit_reps(nv)
        assert np.array_equal(ra, rb)
        assert np.array_equal(sa, sb)
        assert int(sa.sum()) == 1 << (nv * (nv - 1) // 2)


class TestSelection:
    def test_env_var_selects_backend(self):
        import os
        import subprocess
        import sys

        probe = "import twographs; print(twographs.BACKEND)"
        forced = subprocess.run(
            [sys.executable, "-c", probe],
            env={**os.environ, "TWOGRAPHS_BACKEND": "pure"},
            capture_output=True,
            text=True,
        )
        assert forced.stdout.strip() == "pure"
        default = subprocess.run(
            [sys.executable, "-c", probe],
            env={k: v for k, v in os.environ.items() if k != "TWOGRAPHS_BACKEND"},
            capture_output=True,
            text=True,
        )
        assert default.stdout.strip() == "compiled"
