"""Exception hierarchy shared by all modules.

Each class carries a short ``code`` so the CLI can map failures to exit
statuses without string matching.
"""


class MultitensorError(Exception):
    code = "E_GENERIC"


class SpecError(MultitensorError, ValueError):
    """Malformed or inconsistent contraction specification."""

    code = "E_SPEC"


class ColorError(SpecError):
    code = "E_COLOR"


class IncompatibleError(SpecError):
    code = "E_INCOMPATIBLE"

    def __init__(self, color, left, right, message=None):
        self.color = color
        self.left = left
        self.right = right
        super().__init__(
            message
            or f"color {color} has multiplicity {left} on the white side "
            f"but {right} on the black side"
        )


class ChromaticError(SpecError):
    code = "E_CHROMATIC"

    def __init__(self, color, side="white"):
        self.color = color
        self.side = side
        super().__init__(f"color {color} is unused on the {side} side")


class BadSigmaError(MultitensorError, ValueError):
    code = "E_BADSIGMA"


class TooLargeError(MultitensorError):
    code = "E_TOOLARGE"

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what} has size {size}, above the bound {bound}")


class DimensionError(MultitensorError, ValueError):
    code = "E_DIMENSION"


class MissingTensorError(MultitensorError, KeyError):
    code = "E_TYPE"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NotFullTypeError(SpecError):
    code = "E_NOTFULLTYPE"


class IntegralityError(AssertionError):
    """An orbit count that should be an integer came out fractional."""
