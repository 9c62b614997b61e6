"""Decide how the values of two cyclotomic polynomials relate across every
integer q >= 2, producing a finite certificate.

For indices m and n, let D be the polynomial for n minus the polynomial
for m.  When D is nonzero, write c for the largest absolute coefficient
of D and d for its degree.  For q >= c + 1,

    |D(q)| >= q^d - c*(q^(d-1) + ... + 1) > 0,

because q^d * (q - 1) >= c * q^d > c * (q^d - 1); equivalently, after
splitting D into its positive and negative parts A - B, the base-q digit
string of A(q) beats B(q) once q exceeds every digit.  So the sign of
D(q) equals the sign of D's leading coefficient for all q > c, and only
q in [2, c] (empty when c <= 1) needs exhaustive evaluation.  The verdict
plus those finitely many signs certify the infinite family of
inequalities.

Ties (D(q) = 0 at some checked q) are compatible with the ordering, which
is defined through "<="; they are recorded in the certificate rather than
downgrading the verdict, so strictness can be audited separately.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .arith import moebius, radical, totient
from .cyclotomic import CycloCache, cyclo, eval_cyclo
from .intpoly import IntPoly

SHORTCUT_PHI_GAP = "phi-gap"  # different totients decide the pair outright
SHORTCUT_ODD_DOUBLE = "odd-double"  # pair {k, 2k} with k odd, decided by mu(radical(k))


class Verdict(enum.Enum):
    """Relation between indices m and n over all integer arguments q >= 2."""

    LESS = "LESS"  # value at m <= value at n everywhere, m != n
    GREATER = "GREATER"
    EQUAL = "EQUAL"  # m == n only: distinct indices give distinct polynomials
    INCOMPARABLE = "INCOMPARABLE"  # the difference changes sign over q >= 2

    def flipped(self) -> "Verdict":
        if self is Verdict.LESS:
            return Verdict.GREATER
        if self is Verdict.GREATER:
            return Verdict.LESS
        return self


@dataclass
class Certificate:
    """Finite evidence for a verdict about infinitely many q.

    threshold_c     largest absolute coefficient of the difference
    leading_sign    sign of the difference's top coefficient (settles all
                    q > threshold_c); 0 when the difference is zero or was
                    never formed (shortcut verdicts)
    checked_q_max   largest q that was exhaustively evaluated; equals
                    max(threshold_c, 1) except when an incomparable verdict
                    needs the first asymptotic q as an explicit witness
    tie_witnesses   q values with exact equality of the two sides
    flip_witnesses  one q with positive and one with negative difference
                    (present exactly when the verdict is INCOMPARABLE)
    split_pos       positive part of the difference (the "A" of A - B),
                    kept for auditability; omitted in batch runs
    split_neg       negated negative part (the "B")
    """

    threshold_c: int
    leading_sign: int
    checked_q_max: int
    tie_witnesses: list[int] = field(default_factory=list)
    flip_witnesses: list[int] = field(default_factory=list)
    split_pos: IntPoly | None = None
    split_neg: IntPoly | None = None


def compare(
    m: int, n: int, cache: CycloCache, *, keep_split: bool = True
) -> tuple[Verdict, Certificate]:
    """Full comparison of indices m and n with certificate.

    Evaluates the difference exactly at every q in [2, threshold_c] and
    settles all larger q by the leading-coefficient argument in the module
    docstring.  With keep_split=False the certificate omits the positive/
    negative split polynomials (batch runs keep memory flat; the split is
    reconstructible from the two indices).
    """
    if m < 1 or n < 1:
        raise ValueError(f"indices must be positive integers, got ({m}, {n})")
    if m == n:
        return Verdict.EQUAL, Certificate(0, 0, 1)

    pm = cyclo(m, cache).coeffs
    pn = cyclo(n, cache).coeffs
    if len(pm) <= len(pn):
        diff = list(pn)
        for i, c in enumerate(pm):
            diff[i] -= c
    else:
        diff = [-c for c in pm]
        for i, c in enumerate(pn):
            diff[i] += c
    while diff and diff[-1] == 0:
        diff.pop()
    # distinct cyclotomic polynomials; the guard is against caller bugs
    if not diff:
        raise ArithmeticError(f"internal: distinct indices {m}, {n} gave a zero difference")

    c = max(map(abs, diff))
    lead = 1 if diff[-1] > 0 else -1
    ties: list[int] = []
    first_neg = first_pos = 0
    for q in range(2, c + 1):
        v = eval_cyclo(n, q, cache) - eval_cyclo(m, q, cache)
        if v == 0:
            ties.append(q)
        elif v < 0:
            if not first_neg:
                first_neg = q
        elif not first_pos:
            first_pos = q

    checked = max(c, 1)
    if lead > 0 and not first_neg:
        verdict = Verdict.LESS
        flips: list[int] = []
    elif lead < 0 and not first_pos:
        verdict = Verdict.GREATER
        flips = []
    else:
        verdict = Verdict.INCOMPARABLE
        # need one witness of each sign; when a sign only occurs
        # asymptotically, evaluate the first asymptotic q explicitly
        if not first_pos:
            first_pos = checked = c + 1
        if not first_neg:
            first_neg = checked = c + 1
        flips = [first_pos, first_neg]

    cert = Certificate(c, lead, checked, ties, flips)
    if keep_split:
        d_poly = IntPoly(diff)
        cert.split_pos, cert.split_neg = d_poly.split_pos_neg()
    return verdict, cert


def compare_fast(
    m: int, n: int, cache: CycloCache
) -> tuple[Verdict, Certificate | str]:
    """Comparison with the two proved shortcuts; agrees with `compare`.

    A totient gap decides the pair without polynomial work (smaller totient
    precedes).  A pair {k, 2k} with k odd is decided by the Moebius function
    of the radical of k: +1 puts k first, -1 puts 2k first.  Anything else
    delegates to `compare`.  Shortcut results carry a tag string instead of
    a certificate.
    """
    if m < 1 or n < 1:
        raise ValueError(f"indices must be positive integers, got ({m}, {n})")
    if m == n:
        return compare(m, n, cache)
    tm, tn = totient(m), totient(n)
    if tm != tn:
        return (Verdict.LESS if tm < tn else Verdict.GREATER), SHORTCUT_PHI_GAP
    k = 0
    if m % 2 == 1 and n == 2 * m:
        k, k_first = m, Verdict.LESS
    elif n % 2 == 1 and m == 2 * n:
        k, k_first = n, Verdict.GREATER
    if k:
        # k precedes 2k iff mu(radical(k)) == 1
        verdict = k_first if moebius(radical(k)) == 1 else k_first.flipped()
        return verdict, SHORTCUT_ODD_DOUBLE
    return compare(m, n, cache)


# ---------------------------------------------------------------------------
# wire format: one flat record per comparison, JSON-encodable
# ---------------------------------------------------------------------------

_RECORD_FIELDS = (
    "verdict",
    "m",
    "n",
    "threshold_c",
    "leading_sign",
    "checked_q_max",
    "tie_witnesses",
    "flip_witnesses",
    "shortcut_tag",
)


def comparison_record(
    m: int, n: int, verdict: Verdict, evidence: Certificate | str
) -> dict:
    """Flat key-value record for one comparison.

    Shortcut results (evidence is a tag string) carry zeroed certificate
    fields; leading_sign 0 means "not computed".
    """
    if isinstance(evidence, Certificate):
        return {
            "verdict": verdict.value,
            "m": m,
            "n": n,
            "threshold_c": evidence.threshold_c,
            "leading_sign": evidence.leading_sign,
            "checked_q_max": evidence.checked_q_max,
            "tie_witnesses": list(evidence.tie_witnesses),
            "flip_witnesses": list(evidence.flip_witnesses),
            "shortcut_tag": None,
        }
    return {
        "verdict": verdict.value,
        "m": m,
        "n": n,
        "threshold_c": 0,
        "leading_sign": 0,
        "checked_q_max": 0,
        "tie_witnesses": [],
        "flip_witnesses": [],
        "shortcut_tag": evidence,
    }


def record_to_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def parse_comparison_record(text: str) -> dict:
    """Inverse of record_to_json for comparison records; validates the shape."""
    rec = json.loads(text)
    missing = [f for f in _RECORD_FIELDS if f not in rec]
    if missing:
        raise ValueError(f"comparison record missing fields: {missing}")
    Verdict(rec["verdict"])
    return rec


def certificate_from_record(rec: dict) -> tuple[int, int, Verdict, Certificate | str]:
    """Rebuild (m, n, verdict, evidence) from a parsed record."""
    verdict = Verdict(rec["verdict"])
    if rec.get("shortcut_tag"):
        return rec["m"], rec["n"], verdict, rec["shortcut_tag"]
    cert = Certificate(
        rec["threshold_c"],
        rec["leading_sign"],
        rec["checked_q_max"],
        list(rec["tie_witnesses"]),
        list(rec["flip_witnesses"]),
    )
    return rec["m"], rec["n"], verdict, cert
