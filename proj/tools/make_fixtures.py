#!/usr/bin/env python3
"""Regenerates the algebra documents in algebras/.

Every file follows the schema consumed by load_algebra: scalars, dim, basis
labels, unit vector and the full d x d x d structure-constant table, all
scalar values as strings.
"""

import os

OUT = os.path.join(os.path.dirname(__file__), "..", "algebras")


def row(xs):
    return "[" + ", ".join(f'"{x}"' for x in xs) + "]"


def write(name, scalars, dim, basis, unit, structure):
    planes = ",\n    ".join("[" + ", ".join(row(r) for r in plane) + "]" for plane in structure)
    body = (
        "{\n"
        f'  "name": "{name}",\n'
        f'  "scalars": {scalars},\n'
        f'  "dim": {dim},\n'
        f'  "basis": {row(basis)},\n'
        f'  "unit": {row(unit)},\n'
        '  "structure": [\n'
        f"    {planes}\n"
        "  ]\n"
        "}\n"
    )
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w") as f:
        f.write(body)
    print(f"wrote {path}")


def cyclic(n):
    basis = [f"g{i}" for i in range(n)]
    unit = ["1"] + ["0"] * (n - 1)
    structure = [
        [["1" if (i + j) % n == k else "0" for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return basis, unit, structure


def matrix2():
    # basis e11, e12, e21, e22; e_ij e_kl = [j=k] e_il
    pairs = [(0, 0), (0, 1), (1, 0), (1, 1)]
    basis = [f"e{i+1}{j+1}" for (i, j) in pairs]
    unit = ["1", "0", "0", "1"]
    structure = []
    for (i, j) in pairs:
        plane = []
        for (k, l) in pairs:
            out = ["0"] * 4
            if j == k:
                out[pairs.index((i, l))] = "1"
            plane.append(out)
        structure.append(plane)
    return basis, unit, structure


def main():
    os.makedirs(OUT, exist_ok=True)
    specs = {
        "q": '{"kind": "Q"}',
        "f2": '{"kind": "Fp", "p": 2}',
        "f3": '{"kind": "Fp", "p": 3}',
        "f5": '{"kind": "Fp", "p": 5}',
    }
    for tag, scal in specs.items():
        for n in range(2, 9):
            basis, unit, structure = cyclic(n)
            write(f"{tag}_c{n}", scal, n, basis, unit, structure)

    basis, unit, structure = matrix2()
    write("m2_q", specs["q"], 4, basis, unit, structure)
    write("m2_f2", specs["f2"], 4, basis, unit, structure)

    write(
        "dual_numbers",
        specs["q"],
        2,
        ["1", "x"],
        ["1", "0"],
        [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
    )

    write(
        "z_x_z",
        '{"kind": "Z"}',
        2,
        ["e1", "e2"],
        ["1", "1"],
        [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]],
    )

    basis, unit, structure = cyclic(2)
    write("z_c2", '{"kind": "Z"}', 2, basis, unit, structure)


if __name__ == "__main__":
    main()
