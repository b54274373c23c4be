"""Exception hierarchy shared by every effect family."""


class EffectError(Exception):
    """Base class for every error raised while building or interpreting computations."""


class UnhandledEffect(EffectError):
    def __init__(self, kind: str, where: str = "") -> None:
        self.kind = kind
        msg = f"unhandled effect: {kind}"
        if where:
            msg += f" (reached {where})"
        super().__init__(msg)


class TagMismatch(EffectError):
    """A continuation slot received a value outside its documented domain."""

    def __init__(self, kind: str, slot: str, expected: str, got: object) -> None:
        self.kind = kind
        self.slot = slot
        self.expected = expected
        super().__init__(
            f"{kind}.{slot}: expected {expected}, got {type(got).__name__} {got!r}"
        )


class MalformedNode(EffectError):
    def __init__(self, kind: str, slot: str, reason: str) -> None:
        self.kind = kind
        self.slot = slot
        super().__init__(f"{kind}.{slot}: {reason}")


class DepthExceeded(EffectError):
    def __init__(self, limit: int) -> None:
        self.limit = limit
        super().__init__(f"interpretation exceeded depth limit {limit}")


class EmptyOnceScope(EffectError):
    def __init__(self) -> None:
        super().__init__("once: empty scope")


class DanglingThunk(EffectError):
    def __init__(self, ptr: int, size: int) -> None:
        self.ptr = ptr
        super().__init__(f"dangling thunk pointer {ptr} (store holds {size})")


class UnevaluatedThunk(EffectError):
    def __init__(self, ptr: int) -> None:
        self.ptr = ptr
        super().__init__(f"unevaluated thunk in eager mode at pointer {ptr}")


class ApplyNonFunction(EffectError):
    def __init__(self, value: object) -> None:
        super().__init__(f"apply non-function: {value!r}")


class UnboundVariable(EffectError):
    def __init__(self, index: int, size: int) -> None:
        self.index = index
        super().__init__(f"unbound variable: index {index} in environment of size {size}")
