"""Wall-clock budget checked from inside long enumerations."""
import logging
import time
from typing import Optional

from app.config import TIME_BUDGET
from app.exceptions import CapExceededError

logger = logging.getLogger(__name__)


class Budget:
    """
    Deadline carried through an enumeration. `check()` is cheap enough to be
    called once per generated candidate.
    """

    def __init__(self, seconds: Optional[float] = None, label: str = "time budget"):
        self.seconds = TIME_BUDGET if seconds is None else seconds
        self.label = label
        self.started = time.monotonic()
        self.deadline = self.started + self.seconds

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def check(self) -> None:
        if time.monotonic() > self.deadline:
            logger.warning(f"{self.label} of {self.seconds}s exhausted after {self.elapsed():.1f}s")
            raise CapExceededError(self.label, f"{self.seconds}s", f"{self.elapsed():.1f}s")


def unlimited() -> Budget:
    return Budget(float("inf"))
