"""JSON jobs: parsing with located errors, execution, and result documents.

A job is one JSON object::

    {"domain": {"type": "quadratic", "d": -5},
     "command": "hermite",
     "matrix": {"row_ideals": [...], "col_ideals": [...], "entries": [[...]]},
     "options": {"bezout_only": false}}

``solve`` also takes ``"rhs"`` (a one-column pseudo-matrix), ``smith`` may
set ``"variant"`` to ``"pseudo"`` (default) or ``"basis-change"``, and
``ideal-op`` takes ``"op"``, ``"ideals"`` and, for membership, ``"element"``.
Ring values are written as decimal strings everywhere in the output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any

from .arith import PruferDomain
from .domains import LIMITS, make_domain
from .errors import (DimensionError, MalformedInputError, NotInvertibleError, PruferError,
                     ValidationError)
from .hermite import double_hermite, hermite
from .ideals import (FgIdeal, ideal_from_json, ideal_includes, ideal_intersect, ideal_inverse,
                     ideal_mul, ideal_sum, ideal_to_json, loc_matrix, member, simplify, unit_ideal)
from .linsolve import solvable_by_ideals, solve_full
from .pseudo import (PseudoBasis, PseudoMatrix, chains_equal, det_ideal, determinantal_chain,
                     determinantal_ideal, pm_from_json, pm_is_invertible, pm_mul, pm_to_json,
                     pm_rank, usual)
from .smith import (fitting_from_matrix, fitting_ideals, smith_change_pseudobasis_square,
                    smith_change_pseudobasis_wide, smith_pseudo_dedekind, torsion_structure)

COMMANDS = ("hermite", "double-hermite", "smith", "solve", "module", "ideal-op")
IDEAL_OPS = {"sum": 2, "mul": 2, "intersect": 2, "div": 2, "equal": 2, "includes": 2,
             "inverse": 1, "simplify": 1, "certificate": 1, "localization": 1, "contains": 1}

EXIT_OK, EXIT_ERROR, EXIT_VERDICT = 0, 1, 2


class JobError(MalformedInputError):
    """A job that cannot be run; ``location`` points into the JSON document."""

    def __init__(self, message, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


@dataclass
class JobDescription:
    domain: PruferDomain
    command: str
    operands: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)


# ---------------------------------------------------------------- parsing

def _pm(D, data, where, max_dim):
    if not isinstance(data, dict):
        raise JobError("pseudo-matrix must be an object", where)
    entries = data.get("entries")
    if isinstance(entries, list):
        n = len(entries)
        m = len(entries[0]) if entries and isinstance(entries[0], list) else 0
        if max(n, m) > max_dim:
            raise JobError(f"dimension {max(n, m)} exceeds the limit {max_dim}", where)
    try:
        return pm_from_json(D, data)
    except ValidationError as exc:
        i, j = exc.position
        raise JobError(f"entry ({i}, {j}) times its column ideal is not inside its row ideal",
                       f"{where}.entries[{i}][{j}]") from exc
    except (PruferError, TypeError, ValueError, KeyError) as exc:
        raise JobError(str(exc), where) from exc


def _ideal(D, data, where):
    try:
        I = ideal_from_json(D, data)
    except (PruferError, TypeError, ValueError) as exc:
        raise JobError(str(exc), where) from exc
    return I


def parse_job(text: str, domain: dict | None = None, max_dim: int | None = None) -> JobDescription:
    """Validate a JSON job; ``domain`` overrides the job's own descriptor."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(f"invalid JSON ({exc.msg})", f"line {exc.lineno} column {exc.colno}") from exc
    if not isinstance(data, dict):
        raise JobError("job must be a JSON object")
    max_dim = LIMITS["max_dim"] if max_dim is None else max_dim
    desc = domain if domain is not None else data.get("domain")
    if isinstance(desc, dict) and "domain" in desc:
        desc = desc["domain"]
    if desc is None:
        raise JobError("missing domain descriptor", "domain")
    try:
        D = make_domain(desc)
    except PruferError as exc:
        raise JobError(str(exc), "domain") from exc
    command = data.get("command")
    if command not in COMMANDS:
        raise JobError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}",
                       "command")
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise JobError("options must be an object", "options")
    ops: dict[str, Any] = {}
    if command in ("hermite", "double-hermite", "smith", "solve", "module"):
        if "matrix" not in data:
            raise JobError("missing operand", "matrix")
        ops["matrix"] = _pm(D, data["matrix"], "matrix", max_dim)
    if command == "solve":
        if "rhs" not in data:
            raise JobError("missing operand", "rhs")
        B = _pm(D, data["rhs"], "rhs", max_dim)
        A = ops["matrix"]
        if B.m != 1:
            raise JobError("right-hand side must have exactly one column", "rhs")
        if B.n != A.n or not chains_equal(A.rows, B.rows):
            raise JobError("row ideals of rhs must equal those of matrix", "rhs.row_ideals")
        ops["rhs"] = B
    if command == "smith":
        variant = data.get("variant", "pseudo")
        if variant not in ("pseudo", "basis-change"):
            raise JobError(f"unknown variant {variant!r}", "variant")
        if variant == "basis-change" and not ops["matrix"].is_usual():
            raise JobError("basis-change Smith needs a usual matrix (all ideals <1>)", "matrix")
        ops["variant"] = variant
    if command == "module":
        A = ops["matrix"]
        if not A.is_usual() or not all(D.is_integral(x) for r in A.entries for x in r):
            raise JobError("module presentations are matrices over the domain", "matrix")
    if command == "ideal-op":
        op = data.get("op")
        if op not in IDEAL_OPS:
            raise JobError(f"unknown ideal operation {op!r}", "op")
        raw = data.get("ideals")
        if not isinstance(raw, list) or len(raw) != IDEAL_OPS[op]:
            raise JobError(f"'{op}' takes {IDEAL_OPS[op]} ideal(s)", "ideals")
        ops["op"] = op
        ops["ideals"] = [_ideal(D, x, f"ideals[{k}]") for k, x in enumerate(raw)]
        if op in ("inverse", "div", "certificate", "localization"):
            last = ops["ideals"][-1]
            if last.is_zero:
                raise JobError("the zero ideal is not allowed here", f"ideals[{len(raw) - 1}]")
        if op == "contains":
            if "element" not in data:
                raise JobError("missing operand", "element")
            try:
                ops["element"] = D.element_from_json(data["element"])
            except (PruferError, TypeError, ValueError) as exc:
                raise JobError(str(exc), "element") from exc
    return JobDescription(D, command, ops, {"bezout_only": bool(options.get("bezout_only", False))})


# ---------------------------------------------------------------- results

def _checksum(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def _identity_check(label, product: PseudoMatrix, target: PseudoMatrix) -> dict:
    got = pm_to_json(product)
    want = pm_to_json(target)
    holds = product.entries == target.entries
    return {"identity": label, "holds": holds, "sha256": _checksum(got),
            "matches_target_sha256": _checksum(want) == _checksum(got)}


def _ideals(ideals):
    return [ideal_to_json(I) for I in ideals]


def _basis_json(P: PseudoBasis) -> dict:
    D = P.domain
    return {"vectors": [[D.to_json(x) for x in v] for v in P.vectors], "ideals": _ideals(P.ideals)}


def _render_pm(name, A: PseudoMatrix) -> list[str]:
    D = A.domain
    out = [f"{name}:  rows {[str(I) for I in A.rows]}  cols {[str(I) for I in A.cols]}"]
    cells = [[D.fmt(x) for x in r] for r in A.entries]
    width = max((len(c) for r in cells for c in r), default=1)
    out.extend("  [" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)
    return out


def _hermite_doc(job: JobDescription, double: bool):
    A = job.operands["matrix"]
    bez = job.options["bezout_only"]
    f = double_hermite(A, bez) if double else hermite(A, bez)
    product = pm_mul(pm_mul(f.L, A, check=False), f.C, check=False)
    check = _identity_check("L * A * C == H", product, f.H)
    check["C_det_ideal_is_one"] = det_ideal(f.C).is_one()
    check["L_det_ideal_is_one"] = det_ideal(f.L).is_one()
    ok = check["holds"] and check["C_det_ideal_is_one"] and check["L_det_ideal_is_one"]
    res = {"rank": f.rank, "L": pm_to_json(f.L), "C": pm_to_json(f.C), "H": pm_to_json(f.H),
           "determinantal_chain": _ideals(determinantal_chain(A))}
    pretty = _render_pm("H", f.H) + _render_pm("L", f.L) + _render_pm("C", f.C)
    return res, check, ok, pretty


def _smith_doc(job: JobDescription):
    A = job.operands["matrix"]
    D = job.domain
    if job.operands["variant"] == "basis-change":
        M = A.entries
        square = A.n == A.m
        if square:
            r = smith_change_pseudobasis_square(D, M)
        else:
            r = smith_change_pseudobasis_wide(D, M, bezout_only=job.options["bezout_only"])
        product = pm_mul(pm_mul(r.L, A, check=False), r.C1, check=False)
        check = _identity_check("L * M * C1 == M1", product, r.M1)
        check["C1_invertible"] = pm_is_invertible(r.C1)
        ok = check["holds"] and check["C1_invertible"]
        res = {"variant": "basis-change", "L": pm_to_json(r.L), "C1": pm_to_json(r.C1),
               "M1": pm_to_json(r.M1), "ideals": _ideals(r.ideals),
               "delta": D.to_json(r.delta)}
        return res, check, ok, _render_pm("M1", r.M1) + [f"ideals: {[str(I) for I in r.ideals]}"]
    s = smith_pseudo_dedekind(A, job.options["bezout_only"])
    product = pm_mul(pm_mul(s.L, A, check=False), s.C, check=False)
    check = _identity_check("L * A * C == S", product, s.S)
    check["L_invertible"] = pm_is_invertible(s.L)
    check["C_invertible"] = pm_is_invertible(s.C)
    ok = check["holds"] and check["L_invertible"] and check["C_invertible"]
    res = {"variant": "pseudo", "L": pm_to_json(s.L), "C": pm_to_json(s.C), "S": pm_to_json(s.S),
           "invariant_ideals": _ideals(s.diagonal)}
    pretty = _render_pm("S", s.S) + [f"invariant ideals: {[str(I) for I in s.diagonal]}"]
    return res, check, ok, pretty


def _solve_doc(job: JobDescription):
    A, B = job.operands["matrix"], job.operands["rhs"]
    sol = solve_full(A, B, job.options["bezout_only"])
    by_ideals = solvable_by_ideals(A, B)
    check = {"determinantal_criterion_agrees": by_ideals == sol.solvable}
    res: dict[str, Any] = {"solvable": sol.solvable, "kernel": _basis_json(sol.kernel)}
    pretty = [f"solvable: {sol.solvable}"]
    if sol.solvable:
        X = sol.particular
        product = pm_mul(A, X, check=False)
        check.update(_identity_check("A * X == B", product, B))
        res["solution"] = pm_to_json(X)
        pretty += _render_pm("X", X)
        ok = check["holds"] and check["determinantal_criterion_agrees"]
    else:
        res["failing_index"] = sol.failing_index
        res["reason"] = sol.reason
        pretty.append(f"failing index {sol.failing_index}: {sol.reason}")
        ok = check["determinantal_criterion_agrees"]
    return res, check, ok, pretty


def _module_doc(job: JobDescription):
    A = job.operands["matrix"]
    D = job.domain
    n, m = A.shape
    r = pm_rank(A)
    chain = [determinantal_ideal(A, k) for k in range(1, r + 1)]
    elementary = [simplify(ideal_mul(chain[k], ideal_inverse(chain[k - 1] if k else unit_ideal(D))))
                  for k in range(r)]
    elementary = [I for I in elementary if not I.is_one()]
    check: dict[str, Any] = {}
    if r == n and n:
        S = torsion_structure(D, A.entries)
        torsion = S.ideals
        F = fitting_from_matrix(D, A.entries)
        Fs = fitting_ideals(S)
        Fs = Fs + [unit_ideal(D)] * (len(F) - len(Fs))
        check["fitting_ideals_match_determinantal_chain"] = chains_equal(F, Fs)
        check["delta"] = D.to_json(S.delta)
    else:
        torsion = elementary
        check["fitting_ideals_match_determinantal_chain"] = True
    check["invariants_match_elementary_divisors"] = chains_equal(torsion, elementary)
    ok = all(v for k, v in check.items() if k != "delta")
    res = {"generators": n, "relations": m, "free_rank": n - r,
           "invariant_ideals": _ideals(torsion),
           "determinantal_chain": _ideals(chain)}
    pretty = ["module: " + " + ".join([f"A/{I}" for I in torsion] + ([f"A^{n - r}"] if n > r else []))
              or "0"]
    return res, check, ok, pretty


def _ideal_doc(job: JobDescription):
    op = job.operands["op"]
    Is = job.operands["ideals"]
    D = job.domain
    check: dict[str, Any] = {}
    res: dict[str, Any] = {"op": op}
    if op in ("sum", "mul", "intersect", "div", "inverse", "simplify"):
        if op == "sum":
            R = ideal_sum(*Is)
        elif op == "mul":
            R = ideal_mul(*Is)
        elif op == "intersect":
            R = ideal_intersect(*Is)
        elif op == "div":
            R = ideal_mul(Is[0], ideal_inverse(Is[1]))
        elif op == "inverse":
            R = ideal_inverse(Is[0])
            check["product_is_one"] = ideal_mul(Is[0], R).is_one()
        else:
            R = simplify(Is[0])
        if not R.is_zero:
            check["certificate_valid"] = _cert_ok(R)
        res["ideal"] = ideal_to_json(R)
        pretty = [f"{op}: {R}"]
    elif op in ("equal", "includes"):
        v = Is[0] == Is[1] if op == "equal" else ideal_includes(Is[0], Is[1])
        res["value"] = v
        pretty = [f"{op}: {v}"]
    elif op == "contains":
        v = member(job.operands["element"], Is[0])
        res["value"] = v
        pretty = [f"contains: {v}"]
    elif op == "certificate":
        I = Is[0]
        res["generators"] = [D.to_json(g) for g in I.gens]
        res["certificate"] = [D.to_json(s) for s in I.cert]
        check["certificate_valid"] = _cert_ok(I)
        pretty = [f"certificate: {[D.fmt(s) for s in I.cert]}"]
    else:
        C = loc_matrix(Is[0])
        k = len(C)
        res["generators"] = [D.to_json(g) for g in Is[0].gens]
        res["matrix"] = [[D.to_json(x) for x in r] for r in C]
        sq = [[sum((C[i][t] * C[t][j] for t in range(k)), D.zero) for j in range(k)] for i in range(k)]
        check["trace_is_one"] = sum((C[i][i] for i in range(k)), D.zero) == D.one
        check["idempotent"] = sq == C
        pretty = ["[" + ", ".join(D.fmt(x) for x in r) + "]" for r in C]
    ok = all(check.values())
    return res, check, ok, pretty


def _cert_ok(I: FgIdeal) -> bool:
    from .arith import certificate_is_valid

    return certificate_is_valid(I.domain, I.gens, I.cert)


_RUNNERS = {
    "hermite": lambda job: _hermite_doc(job, False),
    "double-hermite": lambda job: _hermite_doc(job, True),
    "smith": _smith_doc,
    "solve": _solve_doc,
    "module": _module_doc,
    "ideal-op": _ideal_doc,
}


def run_job(job: JobDescription, pretty: bool = False) -> tuple[dict, int]:
    """Execute ``job``; returns ``(document, exit_code)``.

    Engine errors are reported in the document (exit code 1); a definite
    negative answer (unsolvable system, non-invertible input) gives exit
    code 2.
    """
    doc: dict[str, Any] = {"command": job.command, "domain": job.domain.descriptor()}
    try:
        res, check, ok, lines = _RUNNERS[job.command](job)
    except NotInvertibleError as exc:
        doc["status"] = "not-invertible"
        doc["error"] = f"{job.command}: {exc}"
        if exc.ideal is not None:
            doc["ideal"] = ideal_to_json(exc.ideal)
        return doc, EXIT_VERDICT
    except (PruferError, DimensionError) as exc:
        doc["status"] = "error"
        doc["error"] = f"{job.command}: {exc}"
        return doc, EXIT_ERROR
    doc["result"] = res
    doc["verification"] = check
    if not ok:
        doc["status"] = "error"
        doc["error"] = f"{job.command}: verification failed"
        return doc, EXIT_ERROR
    if pretty:
        doc["rendering"] = lines
    if job.command == "solve" and not res["solvable"]:
        doc["status"] = "unsolvable"
        return doc, EXIT_VERDICT
    doc["status"] = "ok"
    return doc, EXIT_OK
