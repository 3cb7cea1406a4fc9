"""Linear string rewriting with length-two left-hand sides.

Words are Python strings over a one-character-per-letter alphabet.  A rule
replaces an adjacent pair of letters by a QScalar-weighted sum of words.
Reduction is linear: a combination of words is reduced term by term.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .scalars import QScalar

STRATEGIES = ("leftmost", "rightmost", "random")


@dataclass(frozen=True)
class RewriteSystem:
    """Oriented relations ``lhs -> sum(coeff * word)``.

    ``letter_names`` maps internal letters to their printed names.
    """

    name: str
    rules: tuple[tuple[str, tuple[tuple[QScalar, str], ...]], ...]
    letter_names: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for lhs, _ in self.rules:
            if len(lhs) != 2:
                raise ValueError(f"rule left-hand sides must have length 2: {lhs!r}")
        object.__setattr__(self, "_table", {lhs: rhs for lhs, rhs in self.rules})

    @property
    def table(self) -> dict[str, tuple[tuple[QScalar, str], ...]]:
        return self._table  # type: ignore[attr-defined]

    def redexes(self, word: str) -> list[int]:
        table = self.table
        return [p for p in range(len(word) - 1) if word[p : p + 2] in table]

    def is_normal(self, word: str) -> bool:
        table = self.table
        return all(word[p : p + 2] not in table for p in range(len(word) - 1))

    def apply_at(self, word: str, pos: int) -> list[tuple[QScalar, str]]:
        """One rewrite step at ``pos``."""
        rhs = self.table[word[pos : pos + 2]]
        head, tail = word[:pos], word[pos + 2 :]
        return [(c, head + w + tail) for c, w in rhs]

    def reduce(
        self,
        terms: Mapping[str, QScalar] | Iterable[tuple[str, QScalar]],
        strategy: str = "leftmost",
        rng: random.Random | None = None,
    ) -> dict[str, QScalar]:
        """Reduce a combination of words to irreducible words.

        ``strategy`` chooses which redex to contract: the leftmost, the
        rightmost, or a uniformly random one (``rng`` seeds the choice).
        """
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}")
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        pending: dict[str, QScalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            _accumulate(pending, w, QScalar.coerce(c))
        done: dict[str, QScalar] = {}
        table = self.table
        while pending:
            word, coeff = pending.popitem()
            positions = [p for p in range(len(word) - 1) if word[p : p + 2] in table]
            if not positions:
                _accumulate(done, word, coeff)
                continue
            if strategy == "leftmost":
                pos = positions[0]
            elif strategy == "rightmost":
                pos = positions[-1]
            else:
                pos = rng.choice(positions)
            for c, w in self.apply_at(word, pos):
                _accumulate(pending, w, coeff * c)
        return done

    def critical_overlaps(self) -> list[str]:
        """All three-letter words ``xyz`` where both ``xy`` and ``yz`` are redexes."""
        lhs = [l for l, _ in self.rules]
        out = []
        for l1 in lhs:
            for l2 in lhs:
                if l1[1] == l2[0]:
                    out.append(l1 + l2[1])
        return sorted(set(out))

    def resolve_overlap(self, word: str) -> tuple[dict[str, QScalar], dict[str, QScalar]]:
        """Normal forms reached by first rewriting at position 0, resp. 1."""
        results = []
        for pos in (0, 1):
            first = self.apply_at(word, pos)
            results.append(self.reduce(((w, c) for c, w in first), strategy="leftmost"))
        return results[0], results[1]

    def pretty(self, word: str) -> str:
        if not word:
            return "1"
        return " ".join(self.letter_names.get(ch, ch) for ch in word)


def _accumulate(acc: dict[str, QScalar], word: str, coeff: QScalar) -> None:
    if not coeff:
        return
    prev = acc.get(word)
    if prev is None:
        acc[word] = coeff
        return
    s = prev + coeff
    if s:
        acc[word] = s
    else:
        del acc[word]
