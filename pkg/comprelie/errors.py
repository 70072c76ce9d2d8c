"""
This module defines the exceptions raised by comprelie.

Every error derives from ComPreLieError so that the command-line interface
can tell a usage or evaluation problem (exit status 2) apart from a law
that simply failed to hold (exit status 1). Each error also derives from
the builtin exception closest in meaning, so callers that only care about
ValueError or IndexError keep working.
"""



class ComPreLieError(Exception):
    """Base class for all errors raised by comprelie."""



class DimensionMismatch(ComPreLieError, ValueError):
    def __init__(self, expected, actual, what='element'):
        self.expected = expected
        self.actual = actual
        ComPreLieError.__init__(self,
            'Expected %s of dimension %s but got dimension %s.' % (
                what, expected, actual
            )
        )

class LetterOutOfRange(ComPreLieError, IndexError):
    def __init__(self, letter, dim):
        self.letter = letter
        self.dim = dim
        ComPreLieError.__init__(self,
            'Letter x%s is out of range for a space of dimension %s.' % (letter, dim)
        )

class Undefined11(ComPreLieError, ArithmeticError):
    def __init__(self, message=None):
        ComPreLieError.__init__(self, message or
            'The half-shuffle 1<1 is not defined: both arguments have a unit component.'
        )

class NotAugmentation(ComPreLieError, ValueError):
    def __init__(self, counit):
        self.counit = counit
        ComPreLieError.__init__(self,
            'Element has unit component %s and is not in the augmentation ideal.' % counit
        )

class NotPreLie(ComPreLieError, ValueError):
    """
    Raised when a table of structure constants fails the preLie identity.
    The violating basis triple and both sides of the identity are kept.
    """
    def __init__(self, triple, left, right):
        self.triple = triple
        self.left = left
        self.right = right
        ComPreLieError.__init__(self,
            'Structure constants are not preLie at basis triple (e%s, e%s, e%s).' % triple
        )

class InvalidFamily(ComPreLieError, ValueError):
    pass

class NotGraded(ComPreLieError, ValueError):
    def __init__(self, family):
        self.family = family
        ComPreLieError.__init__(self,
            'Family "%s" is not degree-graded and has no lambda sequence.' % family
        )

class IndexBeyondPrefix(ComPreLieError, IndexError):
    def __init__(self, index, length):
        self.index = index
        self.length = length
        ComPreLieError.__init__(self,
            'Lambda index %s is beyond the explicit prefix, which ends at index %s.' % (
                index, length
            )
        )

class MissingHalfShuffle(ComPreLieError, ValueError):
    def __init__(self, structure):
        self.structure = structure
        ComPreLieError.__init__(self,
            'Structure "%s" has no half-shuffle product.' % structure
        )

class NonPrimitiveImage(ComPreLieError, ValueError):
    def __init__(self, element, image):
        self.element = element
        self.image = image
        ComPreLieError.__init__(self,
            'The image %s of %s under a -> a*1 is not primitive.' % (
                image.render(), element.render()
            )
        )

class PreconditionFA(ComPreLieError, ValueError):
    def __init__(self, structure):
        self.structure = structure
        ComPreLieError.__init__(self,
            'Structure "%s" has a nonzero map a -> a*1 on primitives.' % structure
        )

class WrongFamily(ComPreLieError, ValueError):
    pass

class ConfigError(ComPreLieError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        if path is not None and line is not None:
            message = '%s:%s: %s' % (path, line, message)
        elif path is not None:
            message = '%s: %s' % (path, message)
        ComPreLieError.__init__(self, message)

class ExprSyntaxError(ComPreLieError, ValueError):
    def __init__(self, message, offset):
        self.offset = offset
        ComPreLieError.__init__(self, '%s (at byte %s)' % (message, offset))

class EvalError(ComPreLieError, ValueError):
    """
    Wraps an error raised while evaluating an expression with the byte
    offset of the sub-expression that produced it.
    """
    def __init__(self, message, offset, cause=None):
        self.offset = offset
        self.cause = cause
        ComPreLieError.__init__(self, '%s (at byte %s)' % (message, offset))
