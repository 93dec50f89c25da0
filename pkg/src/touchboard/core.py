"""Shared domain types: actions, frames, observations, timesteps, app events.

Everything here is an immutable value object, safe to copy between threads.
The native action is a hybrid of a discrete action type and a continuous
screen position in the unit square (x right, y down, top-left origin).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class TouchboardError(Exception):
    """Base class for errors raised by this package."""


class OutOfBounds(TouchboardError):
    """Action position outside the closed unit square."""

    def __init__(self, x: float, y: float):
        super().__init__(f"position ({x}, {y}) outside [0,1]x[0,1]")
        self.x = x
        self.y = y


class ActionType(enum.IntEnum):
    TOUCH = 0
    LIFT = 1
    REPEAT = 2


class Orientation(enum.IntEnum):
    PORTRAIT_0 = 0
    LANDSCAPE_90 = 1
    PORTRAIT_180 = 2
    LANDSCAPE_270 = 3

    def one_hot(self) -> np.ndarray:
        v = np.zeros(4, dtype=np.float32)
        v[int(self)] = 1.0
        return v


class StepType(enum.IntEnum):
    FIRST = 0
    MID = 1
    LAST = 2


@dataclass(frozen=True)
class RawAction:
    """Hybrid action: what to do (TOUCH/LIFT/REPEAT) and where on screen.

    Construction does not validate the position; use :func:`validate_action`
    at trust boundaries.
    """

    action_type: ActionType
    position: tuple[float, float]

    def to_json(self) -> dict:
        x, y = self.position
        return {"type": int(self.action_type), "x": float(x), "y": float(y)}

    @classmethod
    def from_json(cls, obj: dict) -> "RawAction":
        return cls(ActionType(int(obj["type"])), (float(obj["x"]), float(obj["y"])))


@dataclass(frozen=True, eq=False)
class FrameBuffer:
    """RGB frame, row-major, 3 bytes per pixel.

    `data` has shape (height, width, 3) and dtype uint8, so `data.tobytes()`
    is exactly width*height*3 bytes in row order.
    """

    width: int
    height: int
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (self.height, self.width, 3):
            raise ValueError(
                f"framebuffer data shape {self.data.shape} does not match "
                f"{self.height}x{self.width}x3"
            )
        if self.data.dtype != np.uint8:
            raise ValueError(f"framebuffer dtype must be uint8, got {self.data.dtype}")

    def tobytes(self) -> bytes:
        return np.ascontiguousarray(self.data).tobytes()


@dataclass(frozen=True, eq=False)
class Observation:
    """What the agent sees: pixels, time since the previous fetch, orientation.

    `timedelta` is integer microseconds and is 0 for the first observation
    after a reset.
    """

    pixels: FrameBuffer
    timedelta: int
    orientation: Orientation

    def __post_init__(self):
        if self.timedelta < 0:
            raise ValueError(f"timedelta must be non-negative, got {self.timedelta}")


@dataclass(frozen=True, eq=False)
class TimeStep:
    step_type: StepType
    reward: float
    discount: float
    observation: Observation

    def first(self) -> bool:
        return self.step_type == StepType.FIRST

    def mid(self) -> bool:
        return self.step_type == StepType.MID

    def last(self) -> bool:
        return self.step_type == StepType.LAST


@dataclass(frozen=True)
class AppEvent:
    """Named, timestamped log record emitted by an app.

    These are the sole source of rewards and episode-end signals; timestamps
    are simulation-clock microseconds and are non-decreasing per app.
    """

    timestamp: int
    name: str
    payload: float | str

    def __post_init__(self):
        if not self.name:
            raise ValueError("event name must be non-empty")


# Accumulated per-task side-channel data: key -> list of arrays gathered
# since the last explicit request. Cleared on read.
ExtrasMap = dict[str, list[np.ndarray]]


def validate_action(a: RawAction) -> None:
    """Raise OutOfBounds unless the position lies in the closed unit square."""
    x, y = a.position
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise OutOfBounds(x, y)


def resolve_repeat(current: RawAction, last_resolved: RawAction | None) -> RawAction:
    """Expand REPEAT into the previously resolved action.

    A REPEAT with no prior action resolves to LIFT at the current position:
    LIFT is the one action whose position carries no meaning, so it is the
    safe default for "nothing to repeat".
    """
    if current.action_type != ActionType.REPEAT:
        return current
    if last_resolved is not None:
        return last_resolved
    return RawAction(ActionType.LIFT, current.position)
