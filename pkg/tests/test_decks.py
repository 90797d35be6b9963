from collections import Counter

import pytest

from twographs.canon import canonical_form
from twographs.decks import (
    deck,
    deck_class_count,
    decks_isomorphic,
    decks_switching_equivalent,
)
from twographs.graphs import (
    complete_graph,
    empty_graph,
    named_figure,
    paley_conference_seidel,
)

from conftest import random_graph, random_perm, random_subset
from oracles import relabel


class TestDeck:
    def test_empty_three(self):
        d = deck(empty_graph(3))
        assert len(d.cards) == 3
        assert all(card == empty_graph(2) for card in d.cards)

    def test_card_count(self, rng):
        g = random_graph(rng, rng.randint(2, 9))
        d = deck(g)
        assert len(d.cards) == g.n
        assert all(card.n == g.n - 1 for card in d.cards)

    def test_six_vertex_figure_multiplicities(self):
        # two card isomorphism types, appearing four times and twice
        d = deck(named_figure("x1_6"))
        counts = Counter(canonical_form(c).data for c in d.cards)
        assert sorted(counts.values()) == [2, 4]

    def test_six_vertex_second_figure_multiplicities(self):
        # four card isomorphism types: two once, two twice
        d = deck(named_figure("x2_6"))
        counts = Counter(canonical_form(c).data for c in d.cards)
        assert sorted(counts.values()) == [1, 1, 2, 2]

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            deck(empty_graph(1))


class TestDeckComparisons:
    def test_relabeling_preserves_iso_deck(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(3, 8))
            h = relabel(g, random_perm(rng, g.n))
            assert decks_isomorphic(g, h)
            assert decks_switching_equivalent(g, h)

    def test_six_vertex_figures_differ(self):
        x1, x2 = named_figure("x1_6"), named_figure("x2_6")
        assert not decks_isomorphic(x1, x2)
        assert not decks_switching_equivalent(x1, x2)

    def test_empty_vs_complete(self):
        assert not decks_isomorphic(empty_graph(3), complete_graph(3))

    def test_eight_vertex_triple_pairwise_distinct(self):
        y1, y2, y3 = (named_figure(k) for k in ("y1", "y2", "y3"))
        assert not decks_switching_equivalent(y1, y2)
        assert not decks_switching_equivalent(y1, y3)
        assert not decks_switching_equivalent(y2, y3)

    def test_switching_preserves_class_deck(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(3, 8))
            h = g.switch(random_subset(rng, g.n))
            assert decks_switching_equivalent(g, h)

    def test_iso_implies_switching_equivalent(self, rng):
        for _ in range(30):
            g = random_graph(rng, rng.randint(3, 8))
            h = random_graph(rng, g.n)
            if decks_isomorphic(g, h):
                assert decks_switching_equivalent(g, h)

    def test_unequal_sizes(self):
        assert not decks_isomorphic(empty_graph(3), empty_graph(4))
        assert not decks_switching_equivalent(empty_graph(3), empty_graph(4))


class TestDeckClassCount:
    def test_empty_graphs(self):
        for n in (3, 5, 8):
            assert deck_class_count(empty_graph(n)) == 1

    def test_six_vertex_figure_single_class(self):
        # both card types switch into one another
        assert deck_class_count(named_figure("x1_6")) == 1

    def test_conference_graph_all_cards_equivalent(self):
        g = paley_conference_seidel(25).to_graph()
        assert deck_class_count(g) == 1

    def test_small_rejected(self):
        with pytest.raises(ValueError):
            deck_class_count(empty_graph(2))
