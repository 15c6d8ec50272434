"""Minimal CDCL SAT solver and DIMACS interop.

Conflict-driven clause learning with two watched literals, VSIDS-style
activities, phase saving, and geometric restarts.  The arrowing instances
are small (hundreds of variables), so the solver favors low per-call
overhead over heavyweight features.
"""
from __future__ import annotations

import shlex
import subprocess
import tempfile
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple


class SatError(RuntimeError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for cl in self.clauses:
            for lit in cl:
                v = abs(lit)
                if lit == 0 or v > self.variable_count:
                    raise SatError(f"literal {lit} out of range")


def export_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.variable_count} {len(f.clauses)}"]
    for cl in f.clauses:
        lines.append(" ".join(str(l) for l in cl) + " 0")
    return "\n".join(lines) + "\n"


@dataclass
class SatResult:
    sat: bool
    model: Optional[List[bool]] = None  # model[v] for v in 1..V; index 0 unused


def solve_cnf(f: CnfFormula) -> SatResult:
    return _Solver(f.variable_count, f.clauses).solve()


class _Solver:
    def __init__(self, nvars: int, clauses: Sequence[Sequence[int]]):
        self.nv = nvars
        # literal encoding: lit 2v for +v, 2v+1 for -v
        self.watches: List[List[list]] = [[] for _ in range(2 * nvars + 2)]
        self.assign = [0] * (nvars + 1)  # 0 unset, 1 true, -1 false
        self.level = [0] * (nvars + 1)
        self.reason: List[Optional[list]] = [None] * (nvars + 1)
        self.activity = [0.0] * (nvars + 1)
        self.phase = [False] * (nvars + 1)
        self.trail: List[int] = []  # literals in assignment order
        self.trail_lim: List[int] = []
        self.qhead = 0
        self.var_inc = 1.0
        self.ok = True
        self.clauses: List[list] = []
        for cl in clauses:
            if not self._add_clause(sorted(set(cl), key=abs)):
                self.ok = False
                return

    @staticmethod
    def _enc(lit: int) -> int:
        return (abs(lit) << 1) | (lit < 0)

    def _add_clause(self, cl: List[int]) -> bool:
        # drop tautologies, handle empty and unit clauses
        seen = set(cl)
        if any(-l in seen for l in cl):
            return True
        if not cl:
            return False
        if len(cl) == 1:
            return self._enqueue(cl[0], None)
        arr = list(cl)
        self.clauses.append(arr)
        self.watches[self._enc(-arr[0])].append(arr)
        self.watches[self._enc(-arr[1])].append(arr)
        return True

    def _value(self, lit: int) -> int:
        v = self.assign[abs(lit)]
        return v if lit > 0 else -v

    def _enqueue(self, lit: int, reason: Optional[list]) -> bool:
        val = self._value(lit)
        if val == 1:
            return True
        if val == -1:
            return False
        v = abs(lit)
        self.assign[v] = 1 if lit > 0 else -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)
        return True

    def _propagate(self) -> Optional[list]:
        while self.qhead < len(self.trail):
            lit = self.trail[self.qhead]
            self.qhead += 1
            wl = self.watches[self._enc(lit)]
            i = 0
            while i < len(wl):
                cl = wl[i]
                # ensure the falsified literal sits at position 1
                if cl[0] == -lit:
                    cl[0], cl[1] = cl[1], cl[0]
                if self._value(cl[0]) == 1:
                    i += 1
                    continue
                moved = False
                for j in range(2, len(cl)):
                    if self._value(cl[j]) != -1:
                        cl[1], cl[j] = cl[j], cl[1]
                        self.watches[self._enc(-cl[1])].append(cl)
                        wl[i] = wl[-1]
                        wl.pop()
                        moved = True
                        break
                if moved:
                    continue
                if not self._enqueue(cl[0], cl):
                    return cl
                i += 1
        return None

    def _bump(self, v: int) -> None:
        self.activity[v] += self.var_inc
        if self.activity[v] > 1e100:
            for u in range(1, self.nv + 1):
                self.activity[u] *= 1e-100
            self.var_inc *= 1e-100

    def _analyze(self, conflict: list) -> Tuple[list, int]:
        learnt = []
        seen = [False] * (self.nv + 1)
        counter = 0
        lit0 = None
        idx = len(self.trail) - 1
        reason = conflict
        cur_level = len(self.trail_lim)
        while True:
            for lit in reason:
                v = abs(lit)
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if self.level[v] >= cur_level:
                        counter += 1
                    else:
                        learnt.append(lit)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            lit0 = self.trail[idx]
            v0 = abs(lit0)
            seen[v0] = False
            counter -= 1
            idx -= 1
            if counter == 0:
                break
            reason = [l for l in self.reason[v0] if abs(l) != v0]
        learnt.insert(0, -lit0)
        if len(learnt) == 1:
            back = 0
        else:
            back = max(self.level[abs(l)] for l in learnt[1:])
        return learnt, back

    def _backtrack(self, lvl: int) -> None:
        while len(self.trail_lim) > lvl:
            lim = self.trail_lim.pop()
            for lit in self.trail[lim:]:
                v = abs(lit)
                self.phase[v] = lit > 0
                self.assign[v] = 0
                self.reason[v] = None
            del self.trail[lim:]
        self.qhead = len(self.trail)

    def _decide(self) -> int:
        best, besta = 0, -1.0
        for v in range(1, self.nv + 1):
            if self.assign[v] == 0 and self.activity[v] > besta:
                best, besta = v, self.activity[v]
        if best == 0:
            return 0
        return best if self.phase[best] else -best

    def solve(self) -> SatResult:
        if not self.ok or self._propagate() is not None:
            return SatResult(False)
        conflicts_limit = 128
        while True:
            conflicts = 0
            while True:
                conflict = self._propagate()
                if conflict is not None:
                    conflicts += 1
                    if not self.trail_lim:
                        return SatResult(False)
                    learnt, back = self._analyze(conflict)
                    self._backtrack(back)
                    if len(learnt) == 1:
                        self._enqueue(learnt[0], None)
                    else:
                        # order a second-highest-level literal into watch 1
                        w2 = max(range(1, len(learnt)), key=lambda i: self.level[abs(learnt[i])])
                        learnt[1], learnt[w2] = learnt[w2], learnt[1]
                        self.clauses.append(learnt)
                        self.watches[self._enc(-learnt[0])].append(learnt)
                        self.watches[self._enc(-learnt[1])].append(learnt)
                        self._enqueue(learnt[0], learnt)
                    self.var_inc *= 1.05
                    if conflicts >= conflicts_limit:
                        conflicts_limit = int(conflicts_limit * 1.5)
                        self._backtrack(0)
                        break
                else:
                    lit = self._decide()
                    if lit == 0:
                        model = [False] * (self.nv + 1)
                        for v in range(1, self.nv + 1):
                            model[v] = self.assign[v] == 1
                        return SatResult(True, model)
                    self.trail_lim.append(len(self.trail))
                    self._enqueue(lit, None)


def brute_force_cnf(f: CnfFormula) -> SatResult:
    """Exhaustive 2^V enumeration; independent oracle for small formulas."""
    if f.variable_count > 24:
        raise SatError("brute force limited to 24 variables")
    for bitsv in range(1 << f.variable_count):
        ok = True
        for cl in f.clauses:
            if not any(
                (bitsv >> (abs(l) - 1) & 1) == (l > 0) for l in cl
            ):
                ok = False
                break
        if ok:
            model = [False] * (f.variable_count + 1)
            for v in range(1, f.variable_count + 1):
                model[v] = bool(bitsv >> (v - 1) & 1)
            return SatResult(True, model)
    return SatResult(False)


def solve_external(f: CnfFormula, command: str) -> SatResult:
    """Run an external DIMACS solver (e.g. minisat-style interface).

    The command is given the DIMACS file path as its last argument and
    must print 's SATISFIABLE'/'s UNSATISFIABLE' (or bare SAT/UNSAT) plus
    'v' model lines when satisfiable.
    """
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as fh:
        fh.write(export_dimacs(f))
        path = fh.name
    proc = subprocess.run(
        shlex.split(command) + [path], capture_output=True, text=True
    )
    out = proc.stdout + "\n" + proc.stderr
    sat = None
    lits: List[int] = []
    for line in out.splitlines():
        t = line.strip()
        if t in ("SAT", "s SATISFIABLE") or t.startswith("s SATISFIABLE"):
            sat = True
        elif t in ("UNSAT", "s UNSATISFIABLE") or t.startswith("s UNSATISFIABLE"):
            sat = False
        elif t.startswith("v ") or (sat and t and all(c in "-0123456789 " for c in t)):
            lits += [int(x) for x in t.lstrip("v ").split() if x and x != "0"]
    if sat is None:
        raise SatError(f"external solver gave no verdict: {command}")
    if not sat:
        return SatResult(False)
    model = [False] * (f.variable_count + 1)
    for l in lits:
        if abs(l) <= f.variable_count:
            model[abs(l)] = l > 0
    return SatResult(True, model)
