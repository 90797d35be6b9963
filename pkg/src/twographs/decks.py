"""Vertex-deleted decks and their two comparison relations.

The deck of a graph is the multiset of its n vertex-deleted subgraphs
(cards).  Decks are compared either card-by-card up to isomorphism or up
to switching equivalence; both are decided on sorted certificate
multisets rather than explicit bijections, which keeps 26 cards of 25
vertices each tractable.
"""

from dataclasses import dataclass

from .canon import canonical_form, class_certificate

__all__ = [
    "Deck",
    "deck",
    "decks_isomorphic",
    "decks_switching_equivalent",
    "deck_class_count",
]


@dataclass(frozen=True)
class Deck:
    """Parent vertex count plus the n cards on n-1 vertices."""

    n: int
    cards: tuple

    def iso_key(self):
        return tuple(sorted(canonical_form(card).data for card in self.cards))

    def class_key(self):
        return tuple(sorted(class_certificate(card).data for card in self.cards))


def deck(g):
    if g.n < 2:
        raise ValueError("deck needs at least two vertices")
    cards = tuple(
        g.induced([u for u in range(g.n) if u != v]) for v in range(g.n)
    )
    return Deck(g.n, cards)


def decks_isomorphic(g, h):
    if g.n != h.n:
        return False
    return deck(g).iso_key() == deck(h).iso_key()


def decks_switching_equivalent(g, h):
    if g.n != h.n:
        return False
    return deck(g).class_key() == deck(h).class_key()


def deck_class_count(g):
    """Number of distinct switching-equivalence classes among the cards."""
    if g.n < 3:
        raise ValueError("card class certificates need cards on >= 2 vertices")
    return len(set(deck(g).class_key()))
