"""Exception hierarchy shared by every stage of the pipeline."""


class FreeGroupError(ValueError):
    pass


class LetterOutOfRange(FreeGroupError):
    pass


class AlphabetMismatch(FreeGroupError):
    pass


class EmptyArgumentList(FreeGroupError):
    pass


class ParseError(FreeGroupError):
    pass


class CoreTooLarge(FreeGroupError):
    """The permutation closure grew past the configured cap."""

    def __init__(self, cap, degree):
        super().__init__(f"closure exceeded cap={cap} (action degree {degree})")
        self.cap = cap
        self.degree = degree


class CoveringMapInvalid(FreeGroupError):
    pass


class NotInSubgroup(FreeGroupError):
    pass


class WitnessSearchExhausted(FreeGroupError):
    pass


class WitnessTooLong(FreeGroupError):
    """An intermediate commutator outgrew the configured letter limit."""

    def __init__(self, limit, length, step):
        super().__init__(f"commutator reached {length} letters at argument {step} (limit {limit})")
        self.limit = limit
        self.length = length
        self.step = step


class VerificationFailed(FreeGroupError):
    """A verification suite found a counterexample."""

    def __init__(self, suite, word, detail=""):
        msg = f"suite {suite!r} failed on {word}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.suite = suite
        self.word = word
