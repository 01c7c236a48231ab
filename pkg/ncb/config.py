import logging
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console
from rich.logging import RichHandler

from .errors import ConfigError


class Settings(BaseSettings):
    # Logging
    log_level: str = "INFO"

    # Edge-list parsing
    comment_prefix: str = "#"
    delimiter: Optional[str] = None

    # NCB
    ncb_merge_seeds: bool = False

    # Label propagation
    lpa_max_iters: int = 100
    lpa_repeats: int = 5
    lpa_seed: int = 0

    # Scaling benchmark (planted partition)
    bench_block_size: int = 32
    bench_p_in: float = 0.3
    bench_inter_degree: float = 1.0
    bench_sizes: List[int] = [60, 120, 240, 480]
    bench_repeats: int = 3
    bench_seed: int = 42

    # Paths
    data_dir: str = "data"

    model_config = SettingsConfigDict(env_prefix="NCB_", env_file=".env", extra="ignore")


settings = Settings()


class RunConfig(BaseModel):
    """One CLI run; algorithm-specific options are checked before anything executes."""

    input: Path
    input_format: Optional[Literal["edge-list", "gml"]] = None
    algorithm: Literal["ncb", "lpa", "greedy-modularity"] = "ncb"
    seed: Optional[int] = None
    ground_truth: Optional[Path] = None
    output: Optional[Path] = None
    output_format: Literal["csv", "json"] = "csv"
    trace: bool = False
    merge_seeds: bool = False
    dataset: Optional[str] = None

    @model_validator(mode="after")
    def _check_algorithm_options(self) -> "RunConfig":
        if self.seed is not None and self.algorithm != "lpa":
            raise ValueError(f"--seed only applies to lpa, not {self.algorithm}")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ValueError("--seed must be an unsigned 64-bit integer")
        if self.trace and self.algorithm != "ncb":
            raise ValueError("--trace only applies to ncb")
        if self.trace and self.output is None:
            raise ValueError("--trace needs --output; the trace goes next to the partition file")
        if self.merge_seeds and self.algorithm != "ncb":
            raise ValueError("--merge-seeds only applies to ncb")
        return self

    @classmethod
    def create(cls, **kwargs) -> "RunConfig":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ConfigError(str(e)) from e

    @property
    def resolved_format(self) -> str:
        if self.input_format:
            return self.input_format
        return "gml" if self.input.suffix.lower() == ".gml" else "edge-list"

    @property
    def dataset_name(self) -> str:
        return (self.dataset or self.input.stem).lower()


def configure_logging(level: Optional[str] = None) -> None:
    """Route library logging through rich on stderr."""
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=False, show_path=False)],
        force=True,
    )
