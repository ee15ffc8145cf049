"""Tabular views of reports, used by ``--output table``."""
import logging

import pandas as pd

from ._linalg import format_fraction
from ._linalg import format_signed
from .serialize import edge_key

logger = logging.getLogger(__name__)


def weight_vector_to_df(v, index_base=1):
    df = pd.DataFrame(
        [(edge_key(e, index_base), format_fraction(x)) for e, x in v.items()],
        columns=["edge", "value"],
    )
    return df.set_index("edge")


def cone_to_df(cone, index_base=1):
    rows = []
    for form in cone.facets:
        terms = " ".join("%s*v%s" % (format_signed(c), edge_key(e, index_base)) for e, c in sorted(form.coeffs.items()))
        rows.append((edge_key(form.label, index_base), form.kind, len(form.coeffs), terms))
    df = pd.DataFrame(rows, columns=["facet", "kind", "terms", "form"])
    return df.set_index("facet")


def matchings_to_df(found, index_base=1):
    rows = [(" ".join(edge_key(e, index_base) for e in M), str(parity)) for M, parity in found]
    return pd.DataFrame(rows, columns=["matching", "parity"])


def fan_to_df(F, index_base=1):
    df = pd.DataFrame(F.rays, columns=[f"g{i + 1}" for i in range(F.dim)])
    df = df.assign(label=[edge_key(e, index_base) if e is not None else "" for e in F.labels])
    return df.set_index("label")


def polytope_to_df(P, index_base=1):
    rows = [
        (edge_key(label, index_base), " ".join(str(x) for x in normal), format_fraction(rhs))
        for label, (normal, rhs) in zip(P.labels, P.inequalities)
    ]
    df = pd.DataFrame(rows, columns=["facet", "normal", "rhs"])
    return df.set_index("facet")


def circuits_to_df(report):
    df = pd.DataFrame(report.circuits)
    if df.empty:
        return df
    df = df.assign(coefficients=df.coefficients.map(lambda c: " ".join(f"{k}:{x}" for k, x in c.items())))
    return df.drop(columns=["cones"])


def report_to_df(report):
    """Flat key/value table for a report; nested values are shown as their JSON-ish text."""
    rows = [(key, value if not isinstance(value, (list, dict)) else str(value)) for key, value in report.items()]
    df = pd.DataFrame(rows, columns=["key", "value"])
    return df.set_index("key")


__all__ = [
    "circuits_to_df",
    "cone_to_df",
    "fan_to_df",
    "matchings_to_df",
    "polytope_to_df",
    "report_to_df",
    "weight_vector_to_df",
]
