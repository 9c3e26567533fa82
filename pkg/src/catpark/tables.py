"""Reproduction of the reference tables, computed rather than transcribed.

Every table is returned as a small dict with a title, a header, string rows,
and optional annotations (used where the computed content corrects the
printed source).  Rendering to text/csv/json lives in the cli module.
"""

from catpark.caterpillar import enumerate_caterpillar_pk, theta
from catpark.decomposition import decompose, eta
from catpark.engine import gamma_poly_brute, h_decompose, joint_count_tensor, r_poly_brute
from catpark.sequences import canonical_family, enumerate_u_pk


def seq_text(seq):
    return "(" + ",".join(str(v) for v in seq) + ")"


def h_comb_text(coeffs):
    """Render {degree: coeff} as 'h_3 + 5*h_2 + ...', descending."""
    if not coeffs:
        return "0"
    parts = []
    for d in sorted(coeffs, reverse=True):
        c = coeffs[d]
        parts.append(f"h_{d}" if c == 1 else f"{c}*h_{d}")
    return " + ".join(parts)


def table_parking_distributions():
    """The 12 parking distributions on the (2,3) tree."""
    rows = [[seq_text(p)] for p in enumerate_caterpillar_pk(2, 3)]
    return {
        "id": "1",
        "title": "Parking distributions on the regularity-2, length-3 caterpillar",
        "header": ["distribution"],
        "rows": rows,
        "annotations": [
            "the printed source lists (1,2,3,4,4) twice and omits (1,2,2,4,4); "
            "the corrected set is shown"
        ],
    }


def table_theta():
    """Bounded distributions of length 3 (m=2) and their tree images."""
    rows = []
    for p in enumerate_u_pk(3, canonical_family(2)):
        rows.append([seq_text(p), seq_text(theta(p, 2, 3))])
    return {
        "id": "2",
        "title": "theta on length-3 distributions, m=2",
        "header": ["p", "theta(p)"],
        "rows": rows,
        "annotations": [],
    }


def _decomposition_table(m, n, table_id):
    rows = []
    for p in enumerate_u_pk(n, canonical_family(m)):
        comps = decompose(p, m).components
        rows.append([seq_text(p)] + [seq_text(c) for c in comps])
    return {
        "id": table_id,
        "title": f"First-return decompositions, m={m}, n={n}",
        "header": ["p"] + [f"p{j}" for j in range(1, m + 2)],
        "rows": rows,
        "annotations": [],
    }


def table_decomposition_m2():
    return _decomposition_table(2, 3, "3")


def table_decomposition_m3():
    return _decomposition_table(3, 3, "4")


def table_q_analogs():
    """The q-luck polynomials for m = 2, 3, 4 and n = 0..4."""
    rows = []
    for n in range(5):
        rows.append([str(n)] + [r_poly_brute(m, n).render() for m in (2, 3, 4)])
    return {
        "id": "5",
        "title": "q-luck polynomials R_n for m = 2, 3, 4",
        "header": ["n", "m=2", "m=3", "m=4"],
        "rows": rows,
        "annotations": [],
    }


def _gamma_h_table(m, table_id):
    rows = []
    for n in range(1, 5):
        flat = gamma_poly_brute(m, n).substitute({"u": 1, "v": 1})
        reduced = flat.divide_by_monomial({"q": 1, "t": 1})
        coeffs = h_decompose(flat)
        rows.append([str(n), reduced.render(), h_comb_text(coeffs)])
    return {
        "id": table_id,
        "title": f"Joint luck/frequency polynomials over qt, m={m}",
        "header": ["n", "gamma_n(q,t,1,1)/qt", "h-combination"],
        "rows": rows,
        "annotations": [],
    }


def table_gamma_m2():
    return _gamma_h_table(2, "6")


def table_gamma_m3():
    return _gamma_h_table(3, "7")


def table_gamma_m4():
    return _gamma_h_table(4, "8")


def table_eta():
    rows = []
    for p in enumerate_u_pk(3, canonical_family(2)):
        comps = decompose(p, 2).components
        rows.append(
            [seq_text(p)] + [seq_text(c) for c in comps] + [seq_text(eta(p, 2))]
        )
    return {
        "id": "9",
        "title": "eta on length-3 distributions, m=2",
        "header": ["p", "p1", "p2", "p3", "eta(p)"],
        "rows": rows,
        "annotations": [],
    }


def table_tensor():
    """Joint counts on the (2,4) tree, grid over (luck, freq1, freq2)."""
    tensor = joint_count_tensor(2, 4)
    rows = []
    for k0 in range(1, 5):
        for k1 in range(1, 5):
            rows.append(
                [str(k0), str(k1)]
                + [str(tensor.count((k0, k1, k2))) for k2 in range(1, 5)]
            )
    return {
        "id": "10",
        "title": "Joint counts on the (2,4) tree",
        "header": ["k0", "k1", "k2=1", "k2=2", "k2=3", "k2=4"],
        "rows": rows,
        "annotations": [],
    }


TABLES = {
    "1": table_parking_distributions,
    "2": table_theta,
    "3": table_decomposition_m2,
    "4": table_decomposition_m3,
    "5": table_q_analogs,
    "6": table_gamma_m2,
    "7": table_gamma_m3,
    "8": table_gamma_m4,
    "9": table_eta,
    "10": table_tensor,
}


def build_table(table_id):
    try:
        builder = TABLES[str(table_id)]
    except KeyError:
        raise ValueError(
            f"unknown table id {table_id!r}; valid ids are {sorted(TABLES, key=int)}"
        ) from None
    return builder()
