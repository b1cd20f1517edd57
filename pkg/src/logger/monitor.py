import time
from dataclasses import dataclass, field


@dataclass
class Timing:
    """
    Wall-clock timing of a command or a sweep.
    """

    start_time: float = field(default_factory=time.perf_counter)
    end_time: float | None = None

    def stop(self) -> "Timing":
        self.end_time = time.perf_counter()
        return self

    @property
    def duration(self):
        return None if self.end_time is None else self.end_time - self.start_time

    def dict(self):
        return {"duration": self.duration}

    def __repr__(self) -> str:
        return f"Timing(duration={self.duration})"
