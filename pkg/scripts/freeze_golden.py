"""Record the exact state-sum values of every job in a suite configuration.

Jobs without an ``expected`` value get the computed one, so the written file can be checked in
as the new golden suite.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import tyro
from omegaconf import OmegaConf

from tenj.category.io import load_category
from tenj.cli import resolve
from tenj.scalar import format_approx, format_exact
from tenj.simplicial.io import load_oriented
from tenj.statesum.engine import StateSumOptions, compute
from tenj.utils.launch_utils import load_config
from tenj.utils.reports import print_color


@dataclass
class Args:
    config: str = "configs/acceptance.yaml"
    """Suite configuration to read."""

    output: Optional[str] = None
    """Where to write the frozen suite; defaults to overwriting ``config``."""

    threads: int = 1
    overwrite: bool = False
    """Recompute jobs that already carry an expected value."""

    def __post_init__(self):
        assert self.threads >= 1, "threads must be positive"


def main(args: Args) -> None:
    cfg = load_config(resolve(args.config))
    jobs: List[Dict[str, Any]] = list(cfg.get("jobs", []))
    for job in jobs:
        if "expected" in job and not args.overwrite:
            continue
        o = load_oriented(resolve(job["complex"]))
        cat = load_category(resolve(job["category"]))
        options = StateSumOptions(mode=job.get("mode", "full"), threads=args.threads)
        value = compute(o, cat, options).value
        previous = job.get("expected")
        job["expected"] = format_exact(value)
        color = "yellow" if previous is not None and previous != job["expected"] else "green"
        print_color(
            f"{job['category']} on {job['complex']}: {job['expected']} ~ {format_approx(value)}",
            color=color,
        )
    cfg["jobs"] = jobs
    output = args.output or args.config
    OmegaConf.save(OmegaConf.create(cfg), output)
    print_color(f"wrote {len(jobs)} jobs to {output}", color="green", attrs=("bold",))


if __name__ == "__main__":
    main(tyro.cli(Args))
