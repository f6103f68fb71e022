"""Exception hierarchy for the solver pipeline.

Errors split into two families: input/format errors (CLI exit code 1)
and pipeline failures on well-formed input (CLI exit code 2).
"""


class FramesolveError(Exception):
    """Base class for all solver errors."""


# -- input / format errors (exit 1) --

class EmptyInput(FramesolveError):
    pass


class MalformedConllu(FramesolveError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class MultipleRoots(FramesolveError):
    pass


class NoRoot(FramesolveError):
    pass


class EmptyCorpus(FramesolveError):
    pass


class SingleClassCorpus(FramesolveError):
    pass


class LengthMismatch(FramesolveError):
    pass


class RowSumMismatch(FramesolveError):
    pass


# -- pipeline failures (exit 2) --

class PipelineError(FramesolveError):
    """A well-formed problem the pipeline could not solve."""


class NoVerbFound(PipelineError):
    pass


class UnsupportedSentence(PipelineError):
    pass


class NoQuantity(PipelineError):
    pass


class NoMatchingStateFrame(PipelineError):
    pass


class DivisionByZero(PipelineError):
    pass


class UnsupportedQuestionType(PipelineError):
    pass


class NoAnswerFound(PipelineError):
    pass
