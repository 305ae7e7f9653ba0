"""Regenerate the space documents shipped under spaces/.

Run from the repository root: python tools/make_spaces.py
"""

from __future__ import annotations

from pathlib import Path

from solsel.space import ConfigSpace, categorical, chain, leaf, numerical

THRESHOLDS_DENSE = [0.5, 0.6, 0.7, 0.8, 0.9]
THRESHOLDS_SPARSE = [0.0, 0.01, 0.05, 0.1]


def demo_small() -> ConfigSpace:
    """Small demonstration space: direct solve vs preconditioned GMRES."""
    second = categorical("cpr_second_stage", [("sor", leaf()), ("ilu", leaf())])
    precond = categorical(
        "preconditioner",
        [
            ("system_amg", numerical("system_amg_strong_threshold", THRESHOLDS_DENSE)),
            ("cpr", numerical("cpr_amg_strong_threshold", THRESHOLDS_DENSE, second)),
        ],
    )
    root = categorical(
        "solver",
        [
            ("direct", leaf()),
            ("gmres", numerical("gmres_restart", [30, 50, 100], precond)),
        ],
    )
    return ConfigSpace(root)


def _multilevel(prefix: str) -> tuple[str, list]:
    """Two multilevel variants with separately tuned grids and smoother menus."""
    classic = numerical(
        f"{prefix}_classic_theta",
        THRESHOLDS_DENSE,
        numerical(
            f"{prefix}_classic_agg_size",
            [2, 4, 8],
            numerical(
                f"{prefix}_classic_sweeps",
                [1, 2, 3],
                categorical(
                    f"{prefix}_classic_smoother",
                    [("jacobi", leaf()), ("l1_jacobi", leaf()), ("sor", leaf()), ("ssor", leaf())],
                ),
            ),
        ),
    )
    aggregation = numerical(
        f"{prefix}_agg_theta",
        THRESHOLDS_SPARSE,
        numerical(
            f"{prefix}_agg_size",
            [4, 8],
            numerical(
                f"{prefix}_agg_nsmooth",
                [0, 1],
                numerical(
                    f"{prefix}_agg_sweeps",
                    [1, 2, 4],
                    categorical(
                        f"{prefix}_agg_smoother",
                        [("jacobi", leaf()), ("sor", leaf())],
                    ),
                ),
            ),
        ),
    )
    return [("classic", classic), ("aggregation", aggregation)]


def flowheat_full() -> ConfigSpace:
    """Full solver menu for the coupled flow-heat environment."""
    cpr = chain(
        [
            categorical("cpr_pressure_ml", _multilevel("cpr")),
            categorical("cpr_t_smoother", [("none", leaf()), ("jacobi", leaf()), ("sor", leaf())]),
            categorical(
                "cpr_second_stage",
                [
                    ("block_ilu", leaf()),
                    ("block_sor", numerical("cpr_second_sor_omega", [0.8, 1.0, 1.2, 1.5])),
                ],
            ),
        ]
    )
    system_amg = categorical("sys_ml", _multilevel("sys"))
    naive = categorical(
        "naive_algo",
        [
            ("identity", leaf()),
            ("jacobi", leaf()),
            ("block_jacobi", leaf()),
            ("block_sor", leaf()),
            ("block_ilu_0", leaf()),
            ("block_ilu_1", leaf()),
            ("block_ilu_2", leaf()),
        ],
    )
    root = numerical(
        "gmres_restart",
        [30, 50, 100],
        categorical("preconditioner", [("cpr", cpr), ("system_amg", system_amg), ("naive", naive)]),
    )
    return ConfigSpace(root)


def synthetic() -> ConfigSpace:
    """Abstract benchmark space for the synthetic oracle environment."""
    families = []
    for fam in ("f1", "f2", "f3", "f4"):
        sub = chain(
            [
                numerical(f"{fam}_p1", [0.0, 0.25, 0.5, 0.75, 1.0]),
                numerical(f"{fam}_p2", [1, 2, 3, 4, 5]),
                categorical(f"{fam}_mode", [("s1", leaf()), ("s2", leaf())]),
                numerical(f"{fam}_p3", [0.0, 0.25, 0.5, 0.75, 1.0]),
                categorical(f"{fam}_stab", [("on", leaf()), ("off", leaf())]),
            ]
        )
        families.append((fam, sub))
    return ConfigSpace(categorical("family", families))


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "spaces"
    out.mkdir(exist_ok=True)
    for name, build in [
        ("demo_small", demo_small),
        ("flowheat_full", flowheat_full),
        ("synthetic", synthetic),
    ]:
        space = build()
        (out / f"{name}.json").write_text(space.dumps())
        print(
            f"{name}: {space.size} configurations, "
            f"{len(space.cat_slots)}+{len(space.num_slots)} encoding cells"
        )


if __name__ == "__main__":
    main()
