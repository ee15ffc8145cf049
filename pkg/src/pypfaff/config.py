import logging
import random
from dataclasses import dataclass

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "table")


@dataclass(frozen=True)
class RunConfig:
    """
    Settings shared by every command of a run.

    Two runs with equal configs and equal inputs produce identical output.
    """

    seed: int = 0
    trials: int = 8
    index_base: int = 1
    output: str = "json"

    def __post_init__(self):
        self._config_validate(self)

    @staticmethod
    def _config_validate(config):
        if config.index_base not in (0, 1):
            raise ValueError(f"index_base must be 0 or 1, not {config.index_base!r}")
        if config.output not in OUTPUT_FORMATS:
            raise ValueError("output must be one of %s, not %r" % (", ".join(OUTPUT_FORMATS), config.output))
        if config.trials < 1:
            raise ValueError(f"trials must be positive, not {config.trials}")

    def rng(self):
        return random.Random(self.seed)

    def to_internal(self, label):
        return label - self.index_base + 1

    def to_external(self, label):
        return label + self.index_base - 1


__all__ = [
    "RunConfig",
]
