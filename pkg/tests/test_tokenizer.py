# Copyright (C) lqmatch contributors, see LICENSE for text of ISC license

import unittest

import lqmatch.exception
import lqmatch.tokenizer

Token = lqmatch.tokenizer.Token


class TokenizerTestCase(unittest.TestCase):

    def testStr(self):
        tok = lqmatch.tokenizer.Tokenizer('foo')
        token = tok.get()
        self.assertEqual(token, Token(lqmatch.tokenizer.IDENTIFIER, 'foo'))

    def testBytes(self):
        tok = lqmatch.tokenizer.Tokenizer(b'foo')
        token = tok.get()
        self.assertEqual(token, Token(lqmatch.tokenizer.IDENTIFIER, 'foo'))

    def testEmpty1(self):
        tok = lqmatch.tokenizer.Tokenizer('')
        token = tok.get()
        self.assertTrue(token.is_eof())

    def testEmpty2(self):
        tok = lqmatch.tokenizer.Tokenizer('')
        token1 = tok.get()
        token2 = tok.get()
        self.assertTrue(token1.is_eof() and token2.is_eof())

    def testEOL(self):
        tok = lqmatch.tokenizer.Tokenizer('\n')
        token1 = tok.get()
        token2 = tok.get()
        self.assertTrue(token1.is_eol() and token2.is_eof())

    def testWS(self):
        tok = lqmatch.tokenizer.Tokenizer(' \t\n')
        token1 = tok.get()
        self.assertTrue(token1.is_eol())

    def testComment1(self):
        tok = lqmatch.tokenizer.Tokenizer(' #foo\n')
        token1 = tok.get()
        token2 = tok.get()
        self.assertTrue(token1.is_eol() and token2.is_eof())

    def testComment2(self):
        tok = lqmatch.tokenizer.Tokenizer('foo # bar baz')
        tokens = list(iter(tok))
        self.assertEqual(tokens, [Token(lqmatch.tokenizer.IDENTIFIER, 'foo')])

    def testPunctuation(self):
        tok = lqmatch.tokenizer.Tokenizer('b1 [0,1]: a1')
        values = [(t.ttype, t.value) for t in tok]
        self.assertEqual(values, [(lqmatch.tokenizer.IDENTIFIER, 'b1'),
                                  (lqmatch.tokenizer.DELIMITER, '['),
                                  (lqmatch.tokenizer.IDENTIFIER, '0'),
                                  (lqmatch.tokenizer.DELIMITER, ','),
                                  (lqmatch.tokenizer.IDENTIFIER, '1'),
                                  (lqmatch.tokenizer.DELIMITER, ']'),
                                  (lqmatch.tokenizer.DELIMITER, ':'),
                                  (lqmatch.tokenizer.IDENTIFIER, 'a1')])

    def testMultiline(self):
        tok = lqmatch.tokenizer.Tokenizer('foo\n\nbar\n')
        tokens = list(iter(tok))
        self.assertEqual(tokens, [Token(lqmatch.tokenizer.IDENTIFIER, 'foo'),
                                  Token(lqmatch.tokenizer.EOL, '\n'),
                                  Token(lqmatch.tokenizer.EOL, '\n'),
                                  Token(lqmatch.tokenizer.IDENTIFIER, 'bar'),
                                  Token(lqmatch.tokenizer.EOL, '\n')])

    def testLocation(self):
        tok = lqmatch.tokenizer.Tokenizer('foo\n  bar')
        tok.get()
        tok.get()
        token = tok.get()
        self.assertEqual((token.line, token.column), (2, 3))

    def testLocated(self):
        tok = lqmatch.tokenizer.Tokenizer('foo\n  bar', 'input.txt')
        tok.get()
        tok.get()
        token = tok.get()
        error = tok.located('bad thing', token)
        self.assertIsInstance(error, lqmatch.exception.SyntaxError)
        self.assertEqual(str(error), 'input.txt:2:3: bad thing')

    def testUnget1(self):
        tok = lqmatch.tokenizer.Tokenizer('foo')
        t1 = tok.get()
        tok.unget(t1)
        t2 = tok.get()
        self.assertTrue(t1 == t2 and
                        t1.ttype == lqmatch.tokenizer.IDENTIFIER and
                        t1.value == 'foo')

    def testUnget2(self):
        def bad():
            tok = lqmatch.tokenizer.Tokenizer('foo')
            t1 = tok.get()
            tok.unget(t1)
            tok.unget(t1)
        self.assertRaises(lqmatch.tokenizer.UngetBufferFull, bad)

    def testGetEOL1(self):
        tok = lqmatch.tokenizer.Tokenizer('\n')
        t = tok.get_eol()
        self.assertEqual(t, '\n')

    def testGetEOL2(self):
        tok = lqmatch.tokenizer.Tokenizer('')
        t = tok.get_eol()
        self.assertEqual(t, '')

    def testGetEOL3(self):
        def bad():
            tok = lqmatch.tokenizer.Tokenizer('foo')
            tok.get_eol()
        self.assertRaises(lqmatch.exception.SyntaxError, bad)

    def testGetInt(self):
        tok = lqmatch.tokenizer.Tokenizer('12 x')
        self.assertEqual(tok.get_int(), 12)
        self.assertRaises(lqmatch.exception.SyntaxError, tok.get_int)

    def testGetIntNonAsciiDigits(self):
        for text in ('²', '٣', '1²'):
            tok = lqmatch.tokenizer.Tokenizer(text)
            self.assertRaises(lqmatch.exception.SyntaxError, tok.get_int)

    def testGetDelimiter(self):
        tok = lqmatch.tokenizer.Tokenizer(':,')
        self.assertEqual(tok.get_delimiter(':'), ':')
        self.assertRaises(lqmatch.exception.SyntaxError,
                          lambda: tok.get_delimiter(']'))

    def testGetIdentifiersToEOL(self):
        tok = lqmatch.tokenizer.Tokenizer('a b c\nd')
        self.assertEqual(tok.get_identifiers_to_eol(), ['a', 'b', 'c'])
        self.assertEqual(tok.get_identifiers_to_eol(), ['d'])


if __name__ == '__main__':
    unittest.main()
