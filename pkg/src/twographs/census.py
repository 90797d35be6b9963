"""Exhaustive small-n censuses and the verification harnesses.

Counting strategy: the orbits of all labelled-graph codes under vertex
permutations are computed exactly with integer label propagation /
union-find in the backend kernels, so isomorphism counts need no
canonical labelling at all.  Switching-equivalence representatives come
from the isolated-vertex normal form: every class contains a graph whose
vertex 0 is isolated, so it suffices to walk the isomorphism classes on
n-1 vertices, prepend an isolated vertex, and bucket by class
certificate.  That cuts the n = 8 tier from 2^28 labelled graphs to the
1044 isomorphism classes on 7 vertices.

The cycle-index (Burnside) count of isomorphism classes is kept alongside
as an independent integer oracle and as the n = 8 entry of the table.
"""

import random
from dataclasses import dataclass
from math import factorial, gcd

from .backend import kernels
from .canon import class_certificate
from .decks import deck
from .graphs import Graph, pair_index
from .measures import norm_profile
from .spectral import seidel_spectrum

__all__ = [
    "ClassTable",
    "SeparationReport",
    "count_isomorphism_classes",
    "count_isomorphism_classes_formula",
    "count_euler_classes",
    "switching_class_count",
    "enumerate_class_representatives",
    "verify_spectral_determination",
    "verify_infinity_norm_separation",
    "verify_one_norm_conjecture",
    "verify_deck_conjecture",
    "save_class_table",
    "load_class_table",
]

_PROFILE_GAP = 1e-6


@dataclass(frozen=True)
class ClassTable:
    """Representatives of every switching-equivalence class on n vertices."""

    n: int
    reps: tuple  # one Graph per class, ordered by certificate bytes
    certs: tuple  # matching ClassCertificate values
    counts: tuple  # (isomorphism, switching, switching-equivalence) class counts
    seed_classes: tuple  # per class: isomorphism classes on n-1 vertices feeding it


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of one pairwise-separation harness."""

    holds: bool
    collisions: tuple  # pairs (Graph, Graph) that the invariant fails to split
    min_separation: float


def switching_class_count(n):
    """Exact number of switching classes, 2^((n-1)(n-2)/2)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return 1 << ((n - 1) * (n - 2) // 2)


def count_isomorphism_classes(n):
    """Isomorphism classes over all 2^C(n,2) labelled graphs (n <= 7).

    Larger n is rejected: the labelled sweep at n = 8 is 2^28 codes,
    beyond this census tier; use the cycle-index formula for counts.
    """
    if not 3 <= n <= 7:
        raise ValueError(
            "exhaustive isomorphism census supported for 3 <= n <= 7 "
            "(2^28 labelled graphs at n=8 exceed the census budget)"
        )
    reps, _ = kernels.orbit_reps(n)
    return len(reps)


def count_isomorphism_classes_formula(n):
    """Cycle-index count of graphs on n vertices up to isomorphism.

    Sums 2^(pair cycles) over permutation cycle types; exact integers.
    """
    total = 0
    for part in _partitions(n):
        perms = factorial(n)
        for length, mult in part.items():
            perms //= length**mult * factorial(mult)
        pair_cycles = 0
        lens = [l for l, m in part.items() for _ in range(m)]
        for i, a in enumerate(lens):
            pair_cycles += a // 2
            for b in lens[i + 1 :]:
                pair_cycles += gcd(a, b)
        total += perms * (1 << pair_cycles)
    return total // factorial(n)


def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield {}
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            part = dict(rest)
            part[k] = part.get(k, 0) + 1
            yield part


def count_euler_classes(n):
    """Isomorphism classes of graphs with all degrees even (n <= 7).

    For odd n these are in bijection with the switching-equivalence
    classes, which the tests use as a cross-count.
    """
    reps, _ = kernels.orbit_reps(n)
    count = 0
    for code in reps.tolist():
        if all(d % 2 == 0 for d in Graph(n, code).degrees()):
            count += 1
    return count


def _isolated_extension(n, seed_code):
    """Graph on n vertices: new isolated vertex 0 plus the seed on 1..n-1."""
    bits = 0
    m = n - 1
    k = 0
    for i in range(m - 1):
        for j in range(i + 1, m):
            if seed_code >> k & 1:
                bits |= 1 << pair_index(n, i + 1, j + 1)
            k += 1
    return Graph(n, bits)


def enumerate_class_representatives(n):
    """One representative per switching-equivalence class, 3 <= n <= 8."""
    if not 3 <= n <= 8:
        raise ValueError(
            "class enumeration supported for 3 <= n <= 8 "
            "(the seed sweep at n=9 is 2^28 graphs, out of budget)"
        )
    seeds, _ = kernels.orbit_reps(n - 1)
    table = {}
    feeding = {}
    for code in seeds.tolist():
        g = _isolated_extension(n, code)
        cert = class_certificate(g)
        if cert.data not in table:
            table[cert.data] = (cert, g)
        feeding[cert.data] = feeding.get(cert.data, 0) + 1
    order = sorted(table)
    reps = tuple(table[k][1] for k in order)
    certs = tuple(table[k][0] for k in order)
    iso = (
        count_isomorphism_classes(n)
        if n <= 7
        else count_isomorphism_classes_formula(n)
    )
    counts = (iso, switching_class_count(n), len(reps))
    return ClassTable(
        n, reps, certs, counts, tuple(feeding[k] for k in order)
    )


# ---------------------------------------------------------------------------
# Verification harnesses
# ---------------------------------------------------------------------------


def verify_spectral_determination(n, table=None):
    """Group class representatives by rounded spectrum.

    Returns the groups holding two or more distinct classes (empty for
    n <= 7; at n = 8 there are one triple and six pairs).
    """
    if table is None:
        table = enumerate_class_representatives(n)
    groups = {}
    for g in table.reps:
        key = tuple(round(v, 6) for v in seidel_spectrum(g).values)
        groups.setdefault(key, []).append(g)
    return [members for members in groups.values() if len(members) > 1]


def _pairwise_separation(table, family, threads=None):
    profiles = [norm_profile(g, family, threads) for g in table.reps]
    collisions = []
    min_sep = float("inf")
    for i in range(len(profiles)):
        for j in range(i + 1, len(profiles)):
            sep = profiles[i].separation(profiles[j])
            min_sep = min(min_sep, sep)
            if sep <= _PROFILE_GAP:
                collisions.append((table.reps[i], table.reps[j]))
    return collisions, min_sep


def verify_infinity_norm_separation(n, table=None, threads=None):
    """Do infinity-norm profiles split every pair of classes?

    They do for n <= 5; at n = 6 one colliding pair appears.
    """
    if table is None:
        table = enumerate_class_representatives(n)
    collisions, min_sep = _pairwise_separation(table, "inf", threads)
    return SeparationReport(not collisions, tuple(collisions), min_sep)


def verify_one_norm_conjecture(n, table=None, threads=None):
    """Do one-norm profiles (m = 1..n) split every pair of classes?"""
    if table is None:
        table = enumerate_class_representatives(n)
    collisions, min_sep = _pairwise_separation(table, "one", threads)
    return SeparationReport(not collisions, tuple(collisions), min_sep)


def verify_deck_conjecture(n, table=None, samples=3, seed=20260810):
    """Deck certificate multisets: distinct across classes, stable within.

    Each representative is also switched and relabelled ``samples`` times
    to confirm the deck key is a genuine class invariant.
    """
    if n < 4:
        raise ValueError("deck reconstruction is posed for n >= 4")
    if table is None:
        table = enumerate_class_representatives(n)
    rng = random.Random(seed)
    keys = {}
    collisions = []
    for g in table.reps:
        key = deck(g).class_key()
        if key in keys:
            collisions.append((keys[key], g))
        else:
            keys[key] = g
        for _ in range(samples):
            tau = [v for v in range(n) if rng.random() < 0.5]
            perm = list(range(n))
            rng.shuffle(perm)
            h = _relabel(g.switch(tau), perm)
            if deck(h).class_key() != key:
                raise AssertionError("deck key is not switching invariant")
    return SeparationReport(not collisions, tuple(collisions), float("nan"))


def _relabel(g, perm):
    return Graph(
        g.n,
        sum(
            1 << pair_index(g.n, perm[i], perm[j])
            for i, j in g.edges()
        ),
    )


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def save_class_table(table, path):
    """TSV rows: certificate hex, edge-list literal, seed-class count."""
    with open(path, "w") as fh:
        fh.write("# n=%d classes=%d\n" % (table.n, len(table.reps)))
        for cert, g, seeds in zip(table.certs, table.reps, table.seed_classes):
            edges = ",".join("%d-%d" % (i + 1, j + 1) for i, j in g.edges())
            fh.write("%s\tn=%d;%s\t%d\n" % (cert.hex(), g.n, edges, seeds))


def load_class_table(path):
    """Reload representatives saved by ``save_class_table``."""
    from .canon import ClassCertificate
    from .formats import parse_graph_literal

    reps = []
    certs = []
    seeds = []
    n = None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            hexcert, literal, count = line.split("\t")
            g = parse_graph_literal(literal)
            n = g.n
            reps.append(g)
            certs.append(
                ClassCertificate("switching-equivalence", bytes.fromhex(hexcert))
            )
            seeds.append(int(count))
    if n is None:
        raise ValueError("empty class table file: %s" % path)
    iso = (
        count_isomorphism_classes(n)
        if n <= 7
        else count_isomorphism_classes_formula(n)
    )
    return ClassTable(
        n,
        tuple(reps),
        tuple(certs),
        (iso, switching_class_count(n), len(reps)),
        tuple(seeds),
    )
