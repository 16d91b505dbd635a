"""Which structured grevlex orders make the explicit type B set work.

For each candidate order, report whether the quadric marks lead, whether
every mark leads, and whether the set passes the S-pair test.

    python3 scripts/order_search.py --n 4
"""

import argparse

from zonotopal.actions import dual_model
from zonotopal.ideals import candidate_orders, typeB_explicit_set
from zonotopal.polynomials import is_groebner_basis


def leads(marked, order):
    return all(f.leading_monomial(order) == next(iter(lead.terms)) for f, lead in marked)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    args = ap.parse_args()
    model = dual_model(2, args.n)
    for mirrored in (False, True):
        marked = typeB_explicit_set(args.n, mirrored)
        polys = [f for f, _ in marked]
        quad = [(f, l) for f, l in marked if l is not None and f.degree() == 2]
        allm = [(f, l) for f, l in marked if l is not None]
        print(f"# {'mirrored' if mirrored else 'tree'} labeling")
        for name, order in candidate_orders(model):
            q, a = leads(quad, order), leads(allm, order)
            gb = is_groebner_basis(polys, order)[0] if q else None
            print(f"{name:42} quadric-marks={q!s:5} all-marks={a!s:5} groebner={gb}")


if __name__ == "__main__":
    main()
