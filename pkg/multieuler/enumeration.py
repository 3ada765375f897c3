"""Words over [n]_2 and its signed variants, their statistics and distributions.

Four word families are generated:

- ``C``: permutations of the multiset [n]_2 = {1,1,...,n,n}
- ``D``: permutations of [n]_2 together with one n+1
- ``Cpm``: signed permutations of [n]_2 (every position carries a sign)
- ``Dpm``: signed permutations of [n]_2 plus one n+1 that stays positive

:func:`gen_family` streams every word and :func:`word_stats` reads all
statistics off a single word. :func:`distribution` sums a statistic over a
whole family. Every statistic is a sum of contributions from adjacent pairs
of the word padded with zeros, so words that share their unused letters and
their last entry are tallied together. The tests compare both routes.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from . import config
from .exceptions import EnumerationCapException, ValidationException
from .model.formal import FormalPoly
from .model.poly import UniPoly
from .model.word import InvSeq, StatRecord, Word

logger = logging.getLogger(__name__)

WORD_FAMILIES = ("C", "D", "Cpm", "Dpm")
SIGNED_FAMILIES = ("Cpm", "Dpm")
STATISTICS = ("des", "asc", "plat", "des_B", "asc_B", "des_star", "asc_star", "des_r", "neg")
STAT_SPECS = STATISTICS + ("joint", "asc_star_plat_minus_one")

Tally = Counter  # (last entry, statistic vector) -> number of words


@dataclass(frozen=True)
class _Component:
    """One coordinate of a statistic vector.

    ``relations`` lists which adjacent relations count. ``left`` and ``right``
    say whether the sentinel zeros before and after the word take part.
    """

    relations: FrozenSet[str] = frozenset()
    left: bool = False
    right: bool = False
    negatives: bool = False


def _rel(*names: str) -> FrozenSet[str]:
    return frozenset(names)


_COMPONENTS: Dict[str, Tuple[_Component, ...]] = {
    "des": (_Component(_rel("des")),),
    "asc": (_Component(_rel("asc")),),
    "plat": (_Component(_rel("plat")),),
    "des_B": (_Component(_rel("des"), left=True),),
    "asc_B": (_Component(_rel("asc"), left=True),),
    "des_star": (_Component(_rel("des"), left=True, right=True),),
    "asc_star": (_Component(_rel("asc"), left=True, right=True),),
    "des_r": (_Component(_rel("des"), right=True),),
    "neg": (_Component(negatives=True),),
    "joint": (
        _Component(_rel("des"), left=True, right=True),
        _Component(_rel("asc", "plat"), left=True, right=True),
        _Component(negatives=True),
    ),
    "asc_star_plat_minus_one": (_Component(_rel("asc", "plat"), left=True, right=True),),
}
_OFFSETS = {"asc_star_plat_minus_one": -1}


def _check_family(family: str) -> None:
    if family not in WORD_FAMILIES:
        raise ValidationException(
            f"Unknown word family {family!r}. Available: {', '.join(WORD_FAMILIES)}"
        )


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValidationException(f"n must be a positive integer, got {n!r}")


def _check_cap(family: str, n: int, cap_override: bool) -> None:
    cap = config.ENUM_CAP[family]
    if n > cap and not cap_override:
        raise EnumerationCapException(
            f"Enumeration of {family} exceeds cap", family=family, n=n, cap=cap
        )


def _multiplicities(family: str, n: int) -> Dict[int, int]:
    counts = {v: 2 for v in range(1, n + 1)}
    if family in ("D", "Dpm"):
        counts[n + 1] = 1
    return counts


def _ground(family: str, n: int) -> List[int]:
    return [v for v, m in _multiplicities(family, n).items() for _ in range(m)]


def gen_family(
    family: str, n: int, *, cap_override: bool = False, first: Optional[int] = None
) -> Iterator[Word]:
    """Stream every word of a family exactly once.

    Args:
        family: one of ``C``, ``D``, ``Cpm``, ``Dpm``
        n: size parameter, at least 1
        cap_override: allow n beyond ``config.ENUM_CAP``
        first: restrict to words whose first entry has this absolute value

    Yields:
        Words in lexicographic order of the unsigned word, signs varying last.
    """
    _check_family(family)
    _check_n(n)
    _check_cap(family, n, cap_override)
    base = _ground(family, n)
    if first is not None:
        if first not in base:
            return
        rest = list(base)
        rest.remove(first)
        unsigned = ([first] + perm for perm in multiset_permutations(rest))
    else:
        unsigned = iter(multiset_permutations(base))
    signed = family in SIGNED_FAMILIES
    for perm in unsigned:
        if not signed:
            yield Word(tuple(perm))
            continue
        positions = [i for i, v in enumerate(perm) if v <= n]
        for signs in itertools.product((1, -1), repeat=len(positions)):
            entries = list(perm)
            for i, s in zip(positions, signs):
                entries[i] = s * perm[i]
            yield Word(tuple(entries))


def dump_words(family: str, n: int, *, cap_override: bool = False) -> Iterator[str]:
    """One serialized word per item, for the CLI debug dump."""
    for word in gen_family(family, n, cap_override=cap_override):
        yield word.serialize()


def reversal_negation(word: Word) -> Word:
    """Map s_1 ... s_m to (-s_m) ... (-s_1)."""
    return Word(tuple(-e for e in reversed(word.entries)))


def word_stats(word: Word) -> StatRecord:
    """All descent-type statistics of a word in one pass."""
    entries = word.entries
    if not entries:
        raise ValidationException("Statistics need a nonempty word")
    des = asc = plat = 0
    for a, b in zip(entries, entries[1:]):
        if a > b:
            des += 1
        elif a < b:
            asc += 1
        else:
            plat += 1
    # sentinel zeros never tie with a nonzero entry
    head_des = 1 if entries[0] < 0 else 0
    tail_des = 1 if entries[-1] > 0 else 0
    des_B = des + head_des
    asc_B = asc + 1 - head_des
    return StatRecord(
        des=des,
        asc=asc,
        plat=plat,
        des_B=des_B,
        asc_B=asc_B,
        des_star=des_B + tail_des,
        asc_star=asc_B + 1 - tail_des,
        des_r=des + tail_des,
        neg=sum(1 for e in entries if e < 0),
    )


def _relation(a: int, b: int) -> str:
    if a > b:
        return "des"
    if a < b:
        return "asc"
    return "plat"


def _edge(components: Tuple[_Component, ...], a: int, b: int, where: str) -> Tuple[int, ...]:
    rel = _relation(a, b)
    out = []
    for c in components:
        counted = (
            where == "inner" or (where == "left" and c.left) or (where == "right" and c.right)
        )
        out.append(1 if counted and rel in c.relations else 0)
    return tuple(out)


def _node(components: Tuple[_Component, ...], v: int) -> Tuple[int, ...]:
    return tuple(1 if c.negatives and v < 0 else 0 for c in components)


def _add(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(u, v))


def _transfer(
    multiplicities: Dict[int, int],
    signable: FrozenSet[int],
    components: Tuple[_Component, ...],
    first: Optional[int] = None,
) -> Tally:
    """Tally (last entry, statistic vector) over all words of a multiset.

    Letters in ``signable`` take either sign at every position.
    """
    values = sorted(multiplicities)
    length = sum(multiplicities.values())
    zero = tuple(0 for _ in components)
    State = Tuple[Tuple[int, ...], int]
    layer: Dict[State, Counter] = {
        (tuple(multiplicities[v] for v in values), 0): Counter({zero: 1})
    }
    for step in range(length):
        where = "left" if step == 0 else "inner"
        nxt: Dict[State, Counter] = defaultdict(Counter)
        for (remaining, prev), vectors in layer.items():
            for idx, v in enumerate(values):
                if remaining[idx] == 0:
                    continue
                if step == 0 and first is not None and v != first:
                    continue
                left_over = remaining[:idx] + (remaining[idx] - 1,) + remaining[idx + 1:]
                for s in ((v, -v) if v in signable else (v,)):
                    delta = _add(_edge(components, prev, s, where), _node(components, s))
                    target = nxt[(left_over, s)]
                    for vec, count in vectors.items():
                        target[_add(vec, delta)] += count
        layer = nxt
        logger.debug(f"transfer step {step + 1}/{length}: {len(layer)} states")
    tally: Tally = Counter()
    for (_, last), vectors in layer.items():
        delta = _edge(components, last, 0, "right")
        for vec, count in vectors.items():
            tally[(last, _add(vec, delta))] += count
    return tally


def _family_tally(family: str, n: int, stat: str, first: Optional[int] = None) -> Tally:
    signable = frozenset(range(1, n + 1)) if family in SIGNED_FAMILIES else frozenset()
    return _transfer(_multiplicities(family, n), signable, _COMPONENTS[stat], first)


def _tally_partition(job: Tuple[str, int, str, int]) -> Tally:
    family, n, stat, first = job
    return _family_tally(family, n, stat, first)


def _partitioned_tally(family: str, n: int, stat: str, workers: int) -> Tally:
    jobs = [(family, n, stat, first) for first in sorted(_multiplicities(family, n))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_tally_partition, jobs))
    else:
        parts = [_tally_partition(job) for job in jobs]
    merged: Tally = Counter()
    for part in parts:
        merged.update(part)
    return merged


def _univariate(counts: Dict[int, int]) -> UniPoly:
    if not counts:
        return UniPoly.zero()
    if min(counts) < 0:
        raise ValidationException("Statistic offset produced a negative exponent")
    return UniPoly.of(*(counts.get(k, 0) for k in range(max(counts) + 1)))


def distribution(
    family: str,
    n: int,
    stat: str = "des",
    *,
    workers: int = 1,
    cap_override: bool = False,
) -> Union[UniPoly, FormalPoly]:
    """Distribution of a statistic over a word family.

    ``stat`` is one of :data:`STATISTICS`, ``"asc_star_plat_minus_one"``
    (sum of x^(asc* + plat - 1)) or ``"joint"``, which returns the
    FormalPoly sum of x^des* y^(asc*+plat) q^neg.

    With ``workers > 1`` the family is split by first entry and the parts are
    tallied in a process pool; the result does not depend on the split.
    """
    _check_family(family)
    _check_n(n)
    _check_cap(family, n, cap_override)
    if stat not in STAT_SPECS:
        raise ValidationException(
            f"Unknown statistic {stat!r}. Available: {', '.join(STAT_SPECS)}"
        )
    if workers < 1:
        raise ValidationException(f"workers must be at least 1, got {workers}")
    if workers > 1:
        tally = _partitioned_tally(family, n, stat, workers)
    else:
        tally = _family_tally(family, n, stat)
    logger.debug(f"distribution {family} n={n} {stat}: {sum(tally.values())} words")

    if stat == "joint":
        acc: Dict[Tuple[int, int, int, int], int] = defaultdict(int)
        for (_, (d, a, q)), count in tally.items():
            acc[(d, a, 0, q)] += count
        return FormalPoly(acc)
    offset = _OFFSETS.get(stat, 0)
    counts: Dict[int, int] = defaultdict(int)
    for (_, (value,)), count in tally.items():
        counts[value + offset] += count
    return _univariate(counts)


def first_entry_split(n: int, *, cap_override: bool = False) -> Tuple[UniPoly, UniPoly]:
    """Split the descent polynomial of D_n by whether the first entry is n+1.

    Returns:
        (sum over words starting below n+1, sum over words starting with n+1)
    """
    _check_n(n)
    _check_cap("D", n, cap_override)
    parts = []
    for firsts in (range(1, n + 1), (n + 1,)):
        counts: Dict[int, int] = defaultdict(int)
        for first in firsts:
            for (_, (d,)), count in _family_tally("D", n, "des", first).items():
                counts[d] += count
        parts.append(_univariate(counts))
    return parts[0], parts[1]


def last_entry_split(
    family: str, n: int, *, cap_override: bool = False
) -> Tuple[UniPoly, UniPoly]:
    """Split sum x^des_B over a signed family by the sign of the last entry.

    Returns:
        (sum of x^des_B over words ending positive,
         sum of x^(des_B - 1) over words ending negative)
    """
    if family not in SIGNED_FAMILIES:
        raise ValidationException(f"Last-entry split needs a signed family, got {family!r}")
    _check_n(n)
    _check_cap(family, n, cap_override)
    positive: Dict[int, int] = defaultdict(int)
    negative: Dict[int, int] = defaultdict(int)
    for (last, (d,)), count in _family_tally(family, n, "des_B").items():
        if last > 0:
            positive[d] += count
        else:
            negative[d - 1] += count
    return _univariate(positive), _univariate(negative)


def s_sequence(family: str, n: int) -> Tuple[int, ...]:
    """The s-sequence whose s-Eulerian polynomial is the family polynomial."""
    _check_n(n)
    if family in ("P", "Q"):
        seq = [x for i in range(1, n + 1) for x in (2 * i - 1, i)]
    elif family in ("S", "T"):
        seq = [x for i in range(1, n + 1) for x in (2 * i - 1, 4 * i)]
    else:
        raise ValidationException(f"Unknown family {family!r}. Available: P, Q, S, T")
    if family in ("Q", "T"):
        seq.append(2 * n + 1)
    return tuple(seq)


def iter_inversion_sequences(s: Sequence[int]) -> Iterator[InvSeq]:
    """Every s-inversion sequence, in lexicographic order."""
    s = tuple(s)
    for e in itertools.product(*(range(si) for si in s)):
        yield InvSeq(s, e)


def inv_seq_eulerian(
    s: Sequence[int], *, cap: int = config.INVSEQ_CAP, cap_override: bool = False
) -> UniPoly:
    """Sum of x^asc(e) over all s-inversion sequences e.

    Ascents compare e_i/s_i with e_(i+1)/s_(i+1), starting from e_0/s_0 = 0/1.
    The sum is accumulated position by position keyed on the previous entry.
    """
    s = tuple(int(si) for si in s)
    if any(si < 1 for si in s):
        raise ValidationException("s entries must be positive", detail=str(s))
    total = math.prod(s)
    if total > cap and not cap_override:
        raise EnumerationCapException(
            "Inversion-sequence count exceeds cap", family="invseq", n=total, cap=cap
        )
    layer: Dict[Tuple[int, int], Counter] = {(0, 1): Counter({0: 1})}
    for si in s:
        nxt: Dict[Tuple[int, int], Counter] = defaultdict(Counter)
        for (pe, ps), asc_counts in layer.items():
            for e in range(si):
                up = 1 if pe * si < e * ps else 0
                target = nxt[(e, si)]
                for a, count in asc_counts.items():
                    target[a + up] += count
        layer = nxt
    counts: Dict[int, int] = defaultdict(int)
    for asc_counts in layer.values():
        for a, count in asc_counts.items():
            counts[a] += count
    return _univariate(counts)


def multiset_descent_poly(
    multiplicities: Sequence[int], *, cap: int = config.MULTISET_CAP, cap_override: bool = False
) -> UniPoly:
    """Descent polynomial of all permutations of {1^p_1, ..., m^p_m}."""
    p = tuple(int(pi) for pi in multiplicities)
    if not p or any(pi < 1 for pi in p):
        raise ValidationException("Multiplicities must be positive", detail=str(p))
    if sum(p) > cap and not cap_override:
        raise EnumerationCapException(
            "Multiset size exceeds cap", family="multiset", n=sum(p), cap=cap
        )
    tally = _transfer(
        {i + 1: pi for i, pi in enumerate(p)}, frozenset(), _COMPONENTS["des"]
    )
    counts: Dict[int, int] = defaultdict(int)
    for (_, (d,)), count in tally.items():
        counts[d] += count
    return _univariate(counts)
