# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Common lqmatch Exceptions.

lqmatch modules may also define their own exceptions, which will
always be subclasses of ``LQException``.
"""


class LQException(Exception):
    """Abstract base class shared by all lqmatch exceptions.

    An exception carries either a plain message or the keyword arguments
    named by the class variable ``supp_kwargs``, never both.  Keyword
    arguments are kept in ``self.kwargs`` so that callers can read the
    offending agent, resource or quota back, and the message is built
    from the ``fmt`` class variable.  With no arguments at all the class
    doc string is the message.
    """

    supp_kwargs = set()  # keyword arguments the class requires
    fmt = None  # message template filled from the keyword arguments

    def __init__(self, *args, **kwargs):
        if args and kwargs:
            raise TypeError('%s takes a message or keyword arguments, '
                            'not both' % type(self).__name__)
        if kwargs and set(kwargs) != self.supp_kwargs:
            raise TypeError('%s requires the keyword arguments: %s' %
                            (type(self).__name__,
                             ', '.join(sorted(self.supp_kwargs))))
        self.kwargs = kwargs
        if args:
            super().__init__(*args)
        elif kwargs and self.fmt:
            super().__init__(self.fmt.format(**kwargs))
        else:
            super().__init__(self.__doc__)


class SyntaxError(LQException):
    """Text input is malformed."""


class UnexpectedEnd(SyntaxError):
    """Text input ended unexpectedly."""


class NotOneOne(LQException):
    """The instance is not a ONE-ONE-LQ instance."""
    supp_kwargs = {'resource', 'upper'}
    fmt = "resource {resource} has upper quota {upper}; " \
          "a ONE-ONE-LQ instance is required"


class NoFeasibleMatching(LQException):
    """The instance admits no feasible matching."""


class PreconditionViolated(LQException):
    """A precondition of the operation does not hold."""
