"""Algebra file format: parsing, validation, serialization, structure conversion

An algebra file is one JSON (or YAML) document:

    {
      "kind": "nmv" | "crp" | "ipp" | "residuated",
      "elements": [label, ...],
      "tables": {name: table, ...},
      "consts": {"zero": label, "one": label}
    }

Binary tables (oplus, otimes, to) are arrays of rows in element order, unary
tables (neg) are a single array, and leq is a list of [x, y] pairs listing the
whole relation. See docs/file-format for the grammar.
"""

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import yaml
from pydantic import ValidationError

from ..config import get_logger
from ..models.errors import (
    AlgebraFileError,
    DuplicateLabel,
    MalformedDocument,
    MissingTable,
    OrderError,
    RaggedTable,
    UnexpectedTable,
    UnknownLabel,
)
from ..models.schemas import AlgebraFile, Carrier
from .nmv import NmvAlgebra
from .residuation import CondResPoset, ResiduatedPoset
from .tables import FiniteBinaryOp, FiniteUnaryOp, PartialOrder, validate_partial_order
from .transforms import InvolutivePosetWithProduct

logger = get_logger(__name__)

BINARY_TABLES = ("oplus", "otimes", "to")
UNARY_TABLES = ("neg",)

REQUIRED_TABLES = {
    "nmv": ("oplus", "neg"),
    "crp": ("otimes", "to", "leq"),
    "ipp": ("otimes", "neg", "leq"),
    "residuated": ("otimes", "to", "leq"),
}
REQUIRED_CONSTS = {
    "nmv": ("zero",),
    "crp": ("zero", "one"),
    "ipp": ("zero", "one"),
    "residuated": ("zero", "one"),
}

Structure = Union[NmvAlgebra, CondResPoset, InvolutivePosetWithProduct, ResiduatedPoset]


def _node_at(root, path: Sequence[Union[str, int]]):
    node = root
    for step in path:
        if isinstance(node, yaml.MappingNode):
            node = next((v for k, v in node.value if k.value == str(step)), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(step, int) and step < len(node.value):
            node = node.value[step]
        else:
            return node
        if node is None:
            return None
    return node


def _position(root, path) -> Tuple[Optional[int], Optional[int]]:
    node = _node_at(root, path)
    if node is None:
        return None, None
    return node.start_mark.line + 1, node.start_mark.column + 1


def _location(path: Sequence[Union[str, int]]) -> str:
    text = ""
    for step in path:
        if isinstance(step, int):
            text += f"[{step}]"
        else:
            text += f".{step}" if text else str(step)
    return text


def _fail(cls, message: str, root, path) -> AlgebraFileError:
    line, column = _position(root, path)
    return cls(message, _location(path), line, column)


def _label_of(cell, labels: Dict[str, int], root, path) -> str:
    if isinstance(cell, (list, dict)) or cell is None:
        raise _fail(UnknownLabel, f"expected an element label, got {cell!r}", root, path)
    label = str(cell)
    if label not in labels:
        raise _fail(UnknownLabel, f"unknown label {label!r}", root, path)
    return label


def _check_binary(name: str, table, labels, root) -> List[List[str]]:
    n = len(labels)
    if len(table) != n:
        raise _fail(RaggedTable, f"expected {n} rows, got {len(table)}", root, ["tables", name])
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            width = len(row) if isinstance(row, list) else "no"
            raise _fail(RaggedTable, f"expected {n} entries, got {width}", root, ["tables", name, i])
        rows.append([_label_of(cell, labels, root, ["tables", name, i, j]) for j, cell in enumerate(row)])
    return rows


def _check_unary(name: str, table, labels, root) -> List[str]:
    n = len(labels)
    if len(table) != n:
        raise _fail(RaggedTable, f"expected {n} entries, got {len(table)}", root, ["tables", name])
    return [_label_of(cell, labels, root, ["tables", name, i]) for i, cell in enumerate(table)]


def _check_pairs(table, labels, root) -> List[List[str]]:
    pairs = []
    for i, pair in enumerate(table):
        if not isinstance(pair, list) or len(pair) != 2:
            raise _fail(RaggedTable, "expected a pair [x, y]", root, ["tables", "leq", i])
        pairs.append([_label_of(cell, labels, root, ["tables", "leq", i, j]) for j, cell in enumerate(pair)])
    return pairs


def parse_algebra_file(text: str) -> AlgebraFile:
    """Parse and validate an algebra document

    Raises an AlgebraFileError subclass carrying the dotted location and,
    where the document has one, the line and column of the offending node.
    """
    try:
        root = yaml.compose(text)
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        raise MalformedDocument(problem, "", mark.line + 1 if mark else None,
                                mark.column + 1 if mark else None) from e

    if not isinstance(data, dict):
        raise MalformedDocument("expected a mapping at the top level", "", 1, 1)

    try:
        doc = AlgebraFile.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        path = list(error["loc"])
        raise _fail(MalformedDocument, error["msg"], root, path) from e

    labels: Dict[str, int] = {}
    for i, label in enumerate(doc.elements):
        if label in labels:
            raise _fail(DuplicateLabel, f"duplicate label {label!r}", root, ["elements", i])
        labels[label] = i

    required = REQUIRED_TABLES[doc.kind]
    for name in required:
        if name not in doc.tables:
            raise _fail(MissingTable, f"{doc.kind} files need a {name!r} table", root, ["tables"])
    for name in doc.tables:
        if name not in required:
            reason = "the order of an NMV-algebra is derived" if name == "leq" else "not used by this kind"
            raise _fail(UnexpectedTable, f"table {name!r}: {reason}", root, ["tables", name])

    tables = {}
    for name, table in doc.tables.items():
        if name in BINARY_TABLES:
            tables[name] = _check_binary(name, table, labels, root)
        elif name in UNARY_TABLES:
            tables[name] = _check_unary(name, table, labels, root)
        else:
            tables[name] = _check_pairs(table, labels, root)

    for name in REQUIRED_CONSTS[doc.kind]:
        if name not in doc.consts:
            raise _fail(MissingTable, f"{doc.kind} files need the constant {name!r}", root, ["consts"])
    for name, value in doc.consts.items():
        if name not in ("zero", "one"):
            raise _fail(UnexpectedTable, f"unknown constant {name!r}", root, ["consts", name])
        _label_of(value, labels, root, ["consts", name])

    doc = AlgebraFile(kind=doc.kind, elements=doc.elements, tables=tables, consts=doc.consts)
    if "leq" in tables:
        try:
            _order_matrix(doc)
        except OrderError as e:
            raise _fail(MalformedDocument, str(e), root, ["tables", "leq"]) from e
    return doc


def load_algebra_file(path: str) -> AlgebraFile:
    with open(path, 'r') as f:
        text = f.read()
    doc = parse_algebra_file(text)
    logger.debug(f"Parsed {doc.kind} file {path} with {len(doc.elements)} elements")
    return doc


def serialize_algebra_file(doc: AlgebraFile) -> str:
    """JSON text with one table row per line"""
    tables = []
    for name, table in doc.tables.items():
        if table and isinstance(table[0], list):
            rows = ",\n      ".join(json.dumps(row, ensure_ascii=False) for row in table)
            tables.append(f'    {json.dumps(name)}: [\n      {rows}\n    ]')
        else:
            tables.append(f'    {json.dumps(name)}: {json.dumps(table, ensure_ascii=False)}')
    return "\n".join([
        "{",
        f'  "kind": {json.dumps(doc.kind)},',
        f'  "elements": {json.dumps(doc.elements, ensure_ascii=False)},',
        '  "tables": {',
        ",\n".join(tables),
        "  },",
        f'  "consts": {json.dumps(doc.consts, ensure_ascii=False)}',
        "}",
    ]) + "\n"


@dataclass(frozen=True)
class IndexedTables:
    """The tables of a document as index arrays, before any law is checked"""
    carrier: Carrier
    binary: Dict[str, FiniteBinaryOp]
    unary: Dict[str, FiniteUnaryOp]
    order: Optional[PartialOrder]
    zero: int
    one: Optional[int]


def _order_matrix(doc: AlgebraFile) -> PartialOrder:
    index = {label: i for i, label in enumerate(doc.elements)}
    n = len(doc.elements)
    leq = np.zeros((n, n), dtype=bool)
    for x, y in doc.tables["leq"]:
        leq[index[x], index[y]] = True
    return validate_partial_order(leq)


def indexed_tables(doc: AlgebraFile) -> IndexedTables:
    index = {label: i for i, label in enumerate(doc.elements)}
    binary = {name: FiniteBinaryOp([[index[c] for c in row] for row in doc.tables[name]])
              for name in BINARY_TABLES if name in doc.tables}
    unary = {name: FiniteUnaryOp([index[c] for c in doc.tables[name]])
             for name in UNARY_TABLES if name in doc.tables}
    one = doc.consts.get("one")
    return IndexedTables(
        carrier=Carrier(names=tuple(doc.elements)),
        binary=binary,
        unary=unary,
        order=_order_matrix(doc) if "leq" in doc.tables else None,
        zero=index[doc.consts["zero"]],
        one=index[one] if one is not None else None,
    )


def load_structure(doc: AlgebraFile) -> Structure:
    """Build the validated structure a document describes

    Raises LawViolation or HypothesisError when the tables break the laws of
    their kind.
    """
    t = indexed_tables(doc)
    if doc.kind == "nmv":
        return NmvAlgebra(t.carrier, t.binary["oplus"], t.unary["neg"], t.zero)
    if doc.kind == "crp":
        return CondResPoset(t.carrier, t.order, t.binary["otimes"], t.binary["to"], t.zero, t.one)
    if doc.kind == "residuated":
        return ResiduatedPoset(t.carrier, t.order, t.binary["otimes"], t.binary["to"], t.zero, t.one)
    return InvolutivePosetWithProduct(t.carrier, t.order, t.unary["neg"], t.binary["otimes"], t.zero, t.one)


def _rows(carrier: Carrier, op: FiniteBinaryOp) -> List[List[str]]:
    return [list(carrier.labels(row)) for row in op.tolist()]


def _pairs(carrier: Carrier, order: PartialOrder) -> List[List[str]]:
    return [list(carrier.labels(pair)) for pair in order.pairs()]


def structure_to_file(structure: Structure) -> AlgebraFile:
    c = structure.carrier
    if isinstance(structure, NmvAlgebra):
        return AlgebraFile(
            kind="nmv",
            elements=list(c.names),
            tables={"oplus": _rows(c, structure.oplus), "neg": list(c.labels(structure.neg.tolist()))},
            consts={"zero": c.label(structure.zero)},
        )
    consts = {"zero": c.label(structure.zero), "one": c.label(structure.one)}
    if isinstance(structure, InvolutivePosetWithProduct):
        return AlgebraFile(
            kind="ipp",
            elements=list(c.names),
            tables={
                "otimes": _rows(c, structure.otimes),
                "neg": list(c.labels(structure.neg.tolist())),
                "leq": _pairs(c, structure.order),
            },
            consts=consts,
        )
    return AlgebraFile(
        kind="crp" if isinstance(structure, CondResPoset) else "residuated",
        elements=list(c.names),
        tables={
            "otimes": _rows(c, structure.otimes),
            "to": _rows(c, structure.imp),
            "leq": _pairs(c, structure.order),
        },
        consts=consts,
    )
