import pytest

from twographs.canon import class_certificate
from twographs.census import (
    count_euler_classes,
    count_isomorphism_classes,
    count_isomorphism_classes_formula,
    enumerate_class_representatives,
    load_class_table,
    save_class_table,
    switching_class_count,
    verify_deck_conjecture,
    verify_infinity_norm_separation,
    verify_one_norm_conjecture,
    verify_spectral_determination,
)
from twographs.graphs import Graph, named_figure

EXPECTED = {
    # n: (isomorphism classes, switching classes, switching-equivalence classes)
    3: (4, 2, 2),
    4: (11, 8, 3),
    5: (34, 64, 7),
    6: (156, 1024, 16),
    7: (1044, 32768, 54),
    8: (12346, 1 << 21, 243),
}


class TestCounts:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_switching_class_count(self, n):
        assert switching_class_count(n) == EXPECTED[n][1]

    def test_switching_class_count_n8(self):
        assert switching_class_count(8) == 1 << 21

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_isomorphism_census(self, n):
        assert count_isomorphism_classes(n) == EXPECTED[n][0]

    def test_isomorphism_census_cost_cap(self):
        with pytest.raises(ValueError, match="census"):
            count_isomorphism_classes(8)

    @pytest.mark.parametrize(
        "n,count",
        [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044), (8, 12346)],
    )
    def test_formula_matches_known_counts(self, n, count):
        assert count_isomorphism_classes_formula(n) == count

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_euler_cross_count(self, n):
        # odd n: switching-equivalence classes biject with Euler graphs
        assert count_euler_classes(n) == EXPECTED[n][2]


class TestEnumeration:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_class_counts(self, n):
        table = enumerate_class_representatives(n)
        assert table.counts == EXPECTED[n]
        assert len(table.reps) == EXPECTED[n][2]
        assert len(set(c.data for c in table.certs)) == len(table.reps)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            enumerate_class_representatives(9)
        with pytest.raises(ValueError):
            enumerate_class_representatives(2)

    def test_deterministic(self):
        a = enumerate_class_representatives(5)
        b = enumerate_class_representatives(5)
        assert [c.data for c in a.certs] == [c.data for c in b.certs]
        assert a.reps == b.reps

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_partition_property(self, n):
        # every labelled graph matches exactly one representative certificate
        table = enumerate_class_representatives(n)
        certs = set(c.data for c in table.certs)
        for code in range(1 << (n * (n - 1) // 2)):
            assert class_certificate(Graph(n, code)).data in certs

    def test_partition_property_six(self):
        table = enumerate_class_representatives(6)
        certs = set(c.data for c in table.certs)
        hits = set()
        for code in range(1 << 15):
            cert = class_certificate(Graph(6, code)).data
            assert cert in certs
            hits.add(cert)
        assert hits == certs

    def test_save_load_round_trip(self, tmp_path):
        table = enumerate_class_representatives(5)
        path = tmp_path / "census_5.tsv"
        save_class_table(table, path)
        loaded = load_class_table(path)
        assert loaded.counts == table.counts
        assert [c.data for c in loaded.certs] == [c.data for c in table.certs]
        assert loaded.reps == table.reps
        assert loaded.seed_classes == table.seed_classes


class TestSpectralDetermination:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_spectrum_determines_classes(self, n):
        assert verify_spectral_determination(n) == []


class TestInfinityNormSeparation:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_separates_small(self, n):
        report = verify_infinity_norm_separation(n)
        assert report.holds
        assert report.min_separation > 1e-6

    def test_six_vertex_counterexample(self):
        # three classes share one profile; the documented pair is among them
        report = verify_infinity_norm_separation(6)
        assert not report.holds
        pairs = {
            frozenset((class_certificate(a).data, class_certificate(b).data))
            for a, b in report.collisions
        }
        figure_pair = frozenset(
            (
                class_certificate(named_figure("x1_6")).data,
                class_certificate(named_figure("x2_6")).data,
            )
        )
        assert figure_pair in pairs
        colliding_classes = set().union(*pairs)
        assert len(colliding_classes) == 3


class TestOneNormConjecture:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_holds(self, n):
        report = verify_one_norm_conjecture(n)
        assert report.holds
        assert report.min_separation > 1e-6


class TestDeckConjecture:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_holds(self, n):
        report = verify_deck_conjecture(n)
        assert report.holds

    def test_small_rejected(self):
        with pytest.raises(ValueError):
            verify_deck_conjecture(3)


class TestStretchTier:
    def test_n8_census_and_spectral_groups(self):
        table = enumerate_class_representatives(8)
        assert table.counts == EXPECTED[8]
        groups = verify_spectral_determination(8, table)
        sizes = sorted(len(g) for g in groups)
        assert sizes == [2, 2, 2, 2, 2, 2, 3]
        triple = next(g for g in groups if len(g) == 3)
        triple_certs = {class_certificate(g).data for g in triple}
        figure_certs = {
            class_certificate(named_figure(k)).data for k in ("y1", "y2", "y3")
        }
        assert triple_certs == figure_certs
