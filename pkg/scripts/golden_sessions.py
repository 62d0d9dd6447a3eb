"""Replay the small worked sessions and print what each construction produces."""

from codingtheory import (
    cyclic_code,
    evaluation_code,
    field,
    hamming_code,
    linear_code,
    parse_poly,
    quasi_cyclic_code,
    rs_code,
    syndrome_decode,
)


def show(title, obj):
    print(f"== {title}")
    print(obj)
    print()


def main():
    F4 = field(2, 2)
    C = linear_code(F4, [[1, 1, 0, 0], [0, 0, 1, 1]])
    show("span over GF(4)", C)
    print(f"n={C.n} k={C.k} rate={C.rate} d={C.minimum_weight()} self-dual={C.dual() == C}")
    print("alphabet", [str(x) for x in C.alphabet])
    print()

    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), ("a", "a", "a")]
    E = evaluation_code(F4, pts, ["x+y+z", "a+y*z^2", "z^2", "x+y+z+z^2"])
    show("raw evaluation matrix", E.raw_eval)
    print(f"n={E.n} k={E.k}")
    print()

    H = hamming_code(2, 3)
    show("binary Hamming code, r=3", H)
    w = H.encode([1, 0, 1, 0])
    print("encode 1010 ->", w)
    print("decode 0101110 ->", syndrome_decode(H, [0, 1, 0, 1, 1, 1, 0]))
    print()

    F5 = field(5)
    show("cyclic code of x-1, n=6", cyclic_code(F5, parse_poly("x-1", F5, ("x",)), 6))
    Q = quasi_cyclic_code(F5, [[0, 3, 2, 4], [3, 1, 0, 4]])
    show("quasi-cyclic shift rows", Q.generators)
    show("Reed-Solomon on {1,2,3}, k=3", rs_code(F5, [1, 2, 3], 3).raw_eval)


if __name__ == "__main__":
    main()
