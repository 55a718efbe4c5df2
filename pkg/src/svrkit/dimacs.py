"""DIMACS CNF reading for 3-literal clause sets."""
from __future__ import annotations

from dataclasses import dataclass


class DimacsError(ValueError):
    pass


@dataclass(frozen=True)
class Cnf3Instance:
    """3-CNF over variables 1..n_vars; literals are signed ints."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for i, c in enumerate(clauses):
            if len(c) != 3:
                raise DimacsError(f"clause {i + 1} has {len(c)} literals, expected 3")
            for lit in c:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise DimacsError(f"literal {lit} out of range 1..{self.n_vars}")

    def variables(self) -> list[int]:
        return sorted({abs(x) for c in self.clauses for x in c})


@dataclass(frozen=True)
class NaeInstance:
    """Monotone NAE-3SAT: clauses of three (possibly repeated) positive variables."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for i, c in enumerate(clauses):
            if len(c) != 3:
                raise ValueError(f"clause {i + 1} has {len(c)} literals, expected 3")
            if any(not 1 <= v <= self.n_vars for v in c):
                raise ValueError(f"clause {i + 1} = {c} leaves 1..{self.n_vars}")

    def variables(self) -> list[int]:
        return sorted({v for c in self.clauses for v in c})


def parse_dimacs(text: str) -> Cnf3Instance:
    """Parse DIMACS CNF text.  Clauses may span lines; duplicates are kept."""
    header = None
    clauses, current = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise DimacsError("missing problem line")
    if current:
        raise DimacsError("last clause is not terminated by 0")
    n_vars, n_clauses = header
    if len(clauses) != n_clauses:
        raise DimacsError(f"header announces {n_clauses} clauses, found {len(clauses)}")
    return Cnf3Instance(n_vars, tuple(tuple(c) for c in clauses))


def as_nae(f: Cnf3Instance) -> NaeInstance:
    for i, c in enumerate(f.clauses):
        if any(lit < 0 for lit in c):
            raise DimacsError(f"clause {i + 1} = {c} has a negative literal; NAE input must be monotone")
    return NaeInstance(f.n_vars, f.clauses)


def to_dimacs(f) -> str:
    lines = [f"p cnf {f.n_vars} {len(f.clauses)}"]
    lines += [" ".join(str(x) for x in c) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"
