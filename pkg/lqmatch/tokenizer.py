# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

"""Tokenize the line-oriented lqmatch text formats"""

from io import StringIO
import sys

import lqmatch.exception

_DELIMITERS = {
    ' ': True,
    '\t': True,
    '\r': True,
    '\n': True,
    '#': True,
    ':': True,
    '[': True,
    ']': True,
    ',': True}

_PUNCTUATION = {':': True, '[': True, ']': True, ',': True}

EOF = 0
EOL = 1
IDENTIFIER = 3
DELIMITER = 6


class UngetBufferFull(lqmatch.exception.LQException):
    """An attempt was made to unget a token when the unget buffer was full."""


class Token(object):
    """An lqmatch text format token.

    ttype: The token type
    value: The token value
    line: The line the token starts on
    column: The 1-based column the token starts at
    """

    def __init__(self, ttype, value='', line=0, column=0):
        self.ttype = ttype
        self.value = value
        self.line = line
        self.column = column

    def is_eof(self):
        return self.ttype == EOF

    def is_eol(self):
        return self.ttype == EOL

    def is_identifier(self):
        return self.ttype == IDENTIFIER

    def is_delimiter(self, value=None):
        if self.ttype != DELIMITER:
            return False
        return value is None or self.value == value

    def is_eol_or_eof(self):
        return self.ttype == EOL or self.ttype == EOF

    def __eq__(self, other):
        if not isinstance(other, Token):
            return False
        return (self.ttype == other.ttype and
                self.value == other.value)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __str__(self):
        return '%d "%s"' % (self.ttype, self.value)


class Tokenizer(object):
    """An lqmatch text format tokenizer.

    Comments run from ``#`` to the end of the line and are skipped.  The
    punctuation characters ``:``, ``[``, ``]`` and ``,`` are returned as
    DELIMITER tokens; everything else between whitespace is an
    IDENTIFIER.

    file: The file to tokenize

    ungotten_char: The most recently ungotten character, or None.

    ungotten_token: The most recently ungotten token, or None.

    eof: This variable is true if the tokenizer has encountered EOF.

    line_number: The current line number

    column: The column of the most recently read character

    filename: A filename that will be returned by the where() method.
    """

    def __init__(self, f=sys.stdin, filename=None):
        """Initialize a tokenizer instance.

        f: The file to tokenize.  The default is sys.stdin.
        This parameter may also be a string, in which case the tokenizer
        will take its input from the contents of the string.

        filename: the name of the filename that the where() method
        will return.
        """

        if isinstance(f, str):
            f = StringIO(f)
            if filename is None:
                filename = '<string>'
        elif isinstance(f, bytes):
            f = StringIO(f.decode('utf-8'))
            if filename is None:
                filename = '<string>'
        else:
            if filename is None:
                if f is sys.stdin:
                    filename = '<stdin>'
                else:
                    filename = '<file>'
        self.file = f
        self.ungotten_char = None
        self.ungotten_token = None
        self.eof = False
        self.line_number = 1
        self.column = 0
        self._previous_column = 0
        self.filename = filename

    def _get_char(self):
        """Read a character from input.
        """

        if self.ungotten_char is None:
            if self.eof:
                c = ''
            else:
                c = self.file.read(1)
                if c == '':
                    self.eof = True
                elif c == '\n':
                    self.line_number += 1
                    self._previous_column = self.column
                    self.column = 0
                else:
                    self.column += 1
        else:
            c = self.ungotten_char
            self.ungotten_char = None
            if c == '\n':
                self.line_number += 1
                self._previous_column = self.column
                self.column = 0
            elif c != '':
                self.column += 1
        return c

    def _unget_char(self, c):
        """Unget a character.

        The unget buffer for characters is only one character large; it is
        an error to try to unget a character when the unget buffer is not
        empty.

        c: the character to unget
        raises UngetBufferFull: there is already an ungotten char
        """

        if self.ungotten_char is not None:
            raise UngetBufferFull
        self.ungotten_char = c
        if c == '\n':
            self.line_number -= 1
            self.column = self._previous_column
        elif c != '':
            self.column -= 1

    def where(self):
        """Return the current location in the input.

        Returns a (string, int, int) tuple: the filename of the input,
        the current line number and the current column.
        """

        return (self.filename, self.line_number, self.column + 1)

    def located(self, detail, token=None):
        """Return a ``lqmatch.exception.SyntaxError`` carrying the
        ``<filename>:<line>:<column>:`` prefix.

        The location is that of *token* when given, else the current one.
        """

        if token is not None:
            (line, column) = (token.line, token.column)
        else:
            (_, line, column) = self.where()
        if detail is None or str(detail) == '':
            detail = 'syntax error'
        return lqmatch.exception.SyntaxError(
            "%s:%d:%d: %s" % (self.filename, line, column, detail))

    def skip_whitespace(self):
        """Consume input until a non-whitespace character is encountered.

        Newlines are not whitespace; they end a line.

        Returns the number of characters skipped.
        """

        skipped = 0
        while True:
            c = self._get_char()
            if c != ' ' and c != '\t' and c != '\r':
                self._unget_char(c)
                return skipped
            skipped += 1

    def get(self):
        """Get the next token.

        Returns a Token.
        """

        if self.ungotten_token is not None:
            token = self.ungotten_token
            self.ungotten_token = None
            return token
        self.skip_whitespace()
        line = self.line_number
        column = self.column + 1
        token = ''
        while True:
            c = self._get_char()
            if c == '' or c in _DELIMITERS:
                if token == '':
                    if c == '\n':
                        return Token(EOL, '\n', line, column)
                    elif c == '#':
                        while True:
                            c = self._get_char()
                            if c == '\n' or c == '':
                                break
                        if c == '':
                            return Token(EOF, '', line, column)
                        return Token(EOL, '\n', line, column)
                    elif c in _PUNCTUATION:
                        return Token(DELIMITER, c, line, column)
                    elif c == '':
                        return Token(EOF, '', line, column)
                else:
                    self._unget_char(c)
                break
            token += c
        return Token(IDENTIFIER, token, line, column)

    def unget(self, token):
        """Unget a token.

        The unget buffer for tokens is only one token large; it is
        an error to try to unget a token when the unget buffer is not
        empty.

        token: the token to unget

        Raises UngetBufferFull: there is already an ungotten token
        """

        if self.ungotten_token is not None:
            raise UngetBufferFull
        self.ungotten_token = token

    def next(self):
        """Return the next item in an iteration.

        Returns a Token.
        """

        token = self.get()
        if token.is_eof():
            raise StopIteration
        return token

    __next__ = next

    def __iter__(self):
        return self

    # Helpers

    def get_int(self):
        """Read the next token and interpret it as a non-negative integer.

        Raises lqmatch.exception.SyntaxError if not an integer.

        Returns an int.
        """

        token = self.get()
        if not token.is_identifier():
            raise lqmatch.exception.SyntaxError('expecting an integer')
        if not (token.value.isascii() and token.value.isdigit()):
            raise lqmatch.exception.SyntaxError(
                "expecting an integer, got '%s'" % token.value)
        return int(token.value)

    def get_identifier(self):
        """Read the next token, which should be an identifier.

        Raises lqmatch.exception.SyntaxError if not an identifier.

        Returns a string.
        """

        token = self.get()
        if not token.is_identifier():
            raise lqmatch.exception.SyntaxError('expecting an identifier')
        return token.value

    def get_delimiter(self, value):
        """Read the next token, which must be the delimiter *value*.

        Raises lqmatch.exception.SyntaxError otherwise.
        """

        token = self.get()
        if not token.is_delimiter(value):
            raise lqmatch.exception.SyntaxError(
                "expecting '%s', got '%s'" % (value, token.value.strip()))
        return token.value

    def get_identifiers_to_eol(self):
        """Read identifiers up to the end of the line.

        Returns a list of strings.
        """

        values = []
        while True:
            token = self.get()
            if token.is_eol_or_eof():
                return values
            if not token.is_identifier():
                raise lqmatch.exception.SyntaxError(
                    "unexpected '%s'" % token.value)
            values.append(token.value)

    def get_eol(self):
        """Read the next token and raise an exception if it isn't EOL or
        EOF.

        Returns a string.
        """

        token = self.get()
        if not token.is_eol_or_eof():
            raise lqmatch.exception.SyntaxError(
                'expected EOL or EOF, got %d "%s"' % (token.ttype,
                                                      token.value))
        return token.value
