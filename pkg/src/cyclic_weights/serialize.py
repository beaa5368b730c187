"""JSON documents for every report type, and parsers back to objects.

Every document is a single dict with a "schema" tag and a "command" name;
`parse_document` reverses the matching builder, so round trips preserve
the underlying objects exactly.
"""

from __future__ import annotations

from .chain import ChainResult, SeedReport
from .cyclic_module import (
    CyclicModule,
    ExtensionPair,
    SuccessorSet,
    ValidationReport,
    is_multiplicity_free,
)
from .diagram import ClassifyResult, CyclicDiagram, FieldElement, FieldSpec
from .errors import DomainError
from .explorer import CycleReport, CycleSearchResult
from .weights import (
    BChar,
    Params,
    Weight,
    make_params,
    weight_from_json,
    weight_to_json,
)

SCHEMA = "cyclic-weights/1"


def _head(command: str, params: Params | None = None) -> dict:
    doc = {"schema": SCHEMA, "command": command}
    if params is not None:
        doc["p"] = params.p
        doc["f"] = params.f
    return doc


def _params_of(doc: dict) -> Params:
    return make_params(doc["p"], doc["f"])


# -- chain ------------------------------------------------------------------


def chain_document(chain: ChainResult) -> dict:
    doc = _head("chain", chain.params)
    doc.update(
        r=list(chain.start_digits),
        m=chain.start_twist,
        rotation=chain.rotation,
        length=chain.length,
        weights=[weight_to_json(w) for w in chain.weights],
        twist_sums=list(chain.twists),
    )
    return doc


def parse_chain(doc: dict) -> ChainResult:
    params = _params_of(doc)
    return ChainResult(
        params=params,
        start_digits=tuple(doc["r"]),
        start_twist=doc["m"],
        rotation=doc["rotation"],
        length=doc["length"],
        weights=tuple(weight_from_json(w, params) for w in doc["weights"]),
        twists=tuple(doc["twist_sums"]),
    )


# -- seed identity report ---------------------------------------------------


def seed_report_document(report: SeedReport) -> dict:
    doc = _head("verify-lemma", report.params)
    doc.update(
        r_count=report.r_count,
        identity=report.identity_ok,
        distinct=report.distinct_ok,
        sum_constant=report.sum_constant,
        sum_zero_mod=report.sum_zero_mod,
        parity=report.parity_ok,
        constant_term=report.constant_term_ok,
        column_sums=report.column_sums_ok,
        sum_value=report.sum_value,
        sign_vectors=[list(v) for v in report.sign_vectors],
        witnesses=list(report.witnesses),
        passed=report.passed,
    )
    return doc


def parse_seed_report(doc: dict) -> SeedReport:
    return SeedReport(
        params=_params_of(doc),
        r_count=doc["r_count"],
        identity_ok=doc["identity"],
        distinct_ok=doc["distinct"],
        sum_constant=doc["sum_constant"],
        sum_zero_mod=doc["sum_zero_mod"],
        parity_ok=doc["parity"],
        constant_term_ok=doc["constant_term"],
        column_sums_ok=doc["column_sums"],
        sum_value=doc["sum_value"],
        sign_vectors=tuple(tuple(v) for v in doc["sign_vectors"]),
        witnesses=tuple(doc["witnesses"]),
    )


# -- successor sets ---------------------------------------------------------


def successors_document(w: Weight, found: SuccessorSet) -> dict:
    doc = _head("gr1", w.params)
    doc.update(
        weight=weight_to_json(w),
        successors=[weight_to_json(s) for s in found.weights],
        pruned=[list(d) for d in found.pruned],
    )
    return doc


def parse_successors(doc: dict):
    params = _params_of(doc)
    found = SuccessorSet(
        weights=tuple(weight_from_json(s, params) for s in doc["successors"]),
        pruned=tuple(tuple(d) for d in doc["pruned"]),
    )
    return weight_from_json(doc["weight"], params), found


# -- cyclic modules ---------------------------------------------------------


def _bchar_to_json(ch: BChar) -> list:
    return [ch.a_exp, ch.d_exp]


def _pair_to_json(pair: ExtensionPair) -> dict:
    return {
        "sub": weight_to_json(pair.sub),
        "quotient": weight_to_json(pair.quotient),
        "u_chars": [_bchar_to_json(c) for c in pair.u_chars],
    }


def _pair_from_json(doc: dict, params: Params) -> ExtensionPair:
    return ExtensionPair(
        sub=weight_from_json(doc["sub"], params),
        quotient=weight_from_json(doc["quotient"], params),
        u_chars=tuple(BChar(a, d, params) for a, d in doc["u_chars"]),
    )


def module_document(module: CyclicModule, validation: ValidationReport) -> dict:
    doc = _head("module", module.params)
    doc.update(
        n=module.n,
        pairs=[_pair_to_json(p) for p in module.pairs],
        multiplicity_free=is_multiplicity_free(module),
        validation={
            "subs": validation.subs_ok,
            "cyclic": validation.cyclic_ok,
            "edges": validation.edges_ok,
            "chars": validation.chars_ok,
            "failures": list(validation.failures),
            "passed": validation.passed,
        },
    )
    return doc


def parse_module(doc: dict):
    params = _params_of(doc)
    module = CyclicModule(
        pairs=tuple(_pair_from_json(p, params) for p in doc["pairs"]),
        params=params,
    )
    v = doc["validation"]
    report = ValidationReport(
        subs_ok=v["subs"],
        cyclic_ok=v["cyclic"],
        edges_ok=v["edges"],
        chars_ok=v["chars"],
        failures=tuple(v["failures"]),
    )
    return module, report


# -- diagram classification -------------------------------------------------


def _element_to_json(e: FieldElement) -> list:
    return list(e.coeffs)


def classify_document(
    left: CyclicDiagram, right: CyclicDiagram, result: ClassifyResult
) -> dict:
    spec = left.scalars[0].spec
    doc = _head("diagram-classify", left.module.params)
    doc.update(
        field_degree=spec.d,
        modulus=list(spec.modulus),
        scalars_left=[_element_to_json(s) for s in left.scalars],
        scalars_right=[_element_to_json(s) for s in right.scalars],
        product_left=_element_to_json(result.product_left),
        product_right=_element_to_json(result.product_right),
        isomorphic=result.isomorphic,
        witness=None
        if result.witness is None
        else [_element_to_json(a) for a in result.witness],
    )
    return doc


def parse_classify(doc: dict) -> ClassifyResult:
    spec = FieldSpec(doc["p"], doc["field_degree"], tuple(doc["modulus"]))
    elem = lambda c: FieldElement(tuple(c), spec)
    return ClassifyResult(
        isomorphic=doc["isomorphic"],
        witness=None
        if doc["witness"] is None
        else tuple(elem(a) for a in doc["witness"]),
        product_left=elem(doc["product_left"]),
        product_right=elem(doc["product_right"]),
    )


# -- cycle search -----------------------------------------------------------


def cycles_document(result: CycleSearchResult) -> dict:
    doc = _head("explore", result.params)
    doc.update(
        start=weight_to_json(result.start),
        max_len=result.max_len,
        cycles=[[weight_to_json(w) for w in cyc] for cyc in result.cycles],
        cycle_reports=[
            {
                "valid": rep.valid,
                "multiplicity_free": rep.multiplicity_free,
                "boundary": [weight_to_json(w) for w in rep.boundary_vertices],
            }
            for rep in result.cycle_reports
        ],
        canonical_hits=list(result.canonical_hits),
        pruned_boundary=result.pruned_boundary,
        truncated=result.truncated,
        visits=result.visits,
    )
    return doc


def parse_cycles(doc: dict) -> CycleSearchResult:
    params = _params_of(doc)
    cycles = tuple(
        tuple(weight_from_json(w, params) for w in cyc) for cyc in doc["cycles"]
    )
    reports = tuple(
        CycleReport(
            vertices=cyc,
            valid=rep["valid"],
            multiplicity_free=rep["multiplicity_free"],
            boundary_vertices=tuple(
                weight_from_json(w, params) for w in rep["boundary"]
            ),
        )
        for cyc, rep in zip(cycles, doc["cycle_reports"])
    )
    return CycleSearchResult(
        params=params,
        start=weight_from_json(doc["start"], params),
        max_len=doc["max_len"],
        cycles=cycles,
        cycle_reports=reports,
        canonical_hits=tuple(doc["canonical_hits"]),
        pruned_boundary=doc["pruned_boundary"],
        truncated=doc["truncated"],
        visits=doc["visits"],
    )


# -- symbolic example -------------------------------------------------------


def example_document(f: int, lines) -> dict:
    doc = _head("example")
    doc.update(f=f, lines=list(lines))
    return doc


def parse_example(doc: dict) -> tuple:
    return tuple(doc["lines"])


_PARSERS = {
    "chain": parse_chain,
    "verify-lemma": parse_seed_report,
    "gr1": parse_successors,
    "module": parse_module,
    "diagram-classify": parse_classify,
    "explore": parse_cycles,
    "example": parse_example,
}


def parse_document(doc: dict):
    if doc.get("schema") != SCHEMA:
        raise DomainError(f"unknown schema {doc.get('schema')!r}")
    command = doc.get("command")
    if command not in _PARSERS:
        raise DomainError(f"unknown command {command!r}")
    return _PARSERS[command](doc)
