"""
This module implements the expression language of the command-line
interface:

    expr := ['+'|'-'] term (('+'|'-') term)*
    term := [rational '*'] atom
    atom := word | 'X^' int | rational | '(' expr ')' | func '(' expr {',' expr} ')'
    word := letter+
    letter := 'x' int
    func := sh | hs | pl | cop | rcop | br | eps

A bare rational denotes that multiple of the unit. Parsing produces an
ExprAST whose nodes remember their byte offset in the source text, and
evaluation runs the AST against a StructureUnderTest.
"""

import pyparsing as pp

from .algebra import LinComb, Tensor, rational, render_rational
from .lie import bracket
from .errors import ComPreLieError, ExprSyntaxError, EvalError, MissingHalfShuffle



# Number of arguments per function; sh takes two or more.
functions = {
    'sh': (2, None),
    'hs': (2, 2),
    'pl': (2, 2),
    'br': (2, 2),
    'cop': (1, 1),
    'rcop': (1, 1),
    'eps': (1, 1),
}



class ExprAST(object):
    """
    A node of a parsed expression. Kinds and their payloads:

        sum     value: tuple of signs, args: terms
        scale   value: Fraction, args: (atom,)
        scalar  value: Fraction
        word    value: tuple of letter indices
        power   value: exponent
        group   args: (expr,)
        call    value: function name, args: arguments

    Equality ignores source offsets.
    """

    def __init__(self, kind, value=None, args=(), loc=0):
        self.kind = kind
        self.value = value
        self.args = tuple(args)
        self.loc = loc

    def __eq__(self, other):
        return (
            isinstance(other, ExprAST) and self.kind == other.kind and
            self.value == other.value and self.args == other.args
        )
    def __ne__(self, other):
        return not self == other
    def __hash__(self):
        return hash((self.kind, self.value, self.args))

    def __repr__(self):
        return 'ExprAST(%s)' % self.render()

    def render(self):
        """Render back to source text that parses to an equal AST."""
        if self.kind == 'sum':
            parts = []
            for i, (sign, term) in enumerate(zip(self.value, self.args)):
                if i == 0:
                    parts.append(term.render() if sign == '+' else '-' + term.render())
                else:
                    parts.append('%s %s' % (sign, term.render()))
            return ' '.join(parts)
        elif self.kind == 'scale':
            return '%s*%s' % (render_rational(self.value), self.args[0].render())
        elif self.kind == 'scalar':
            return render_rational(self.value)
        elif self.kind == 'word':
            return ''.join('x%s' % letter for letter in self.value)
        elif self.kind == 'power':
            return 'X^%s' % self.value
        elif self.kind == 'group':
            return '(%s)' % self.args[0].render()
        return '%s(%s)' % (self.value, ', '.join(arg.render() for arg in self.args))



def build_grammar():
    expr = pp.Forward()
    lpar, rpar, comma, star = map(pp.Suppress, '(),*')
    number = pp.Regex(r'\d+(?:/\d+)?')
    sign = pp.one_of('+ -')

    scalar = number.copy().set_parse_action(
        lambda s, loc, t: ExprAST('scalar', rational(t[0]), loc=loc)
    )
    word = pp.Regex(r'(?:x\d+)+').set_parse_action(
        lambda s, loc, t: ExprAST('word', tuple(
            int(letter) for letter in t[0].split('x')[1:]
        ), loc=loc)
    )
    power = pp.Regex(r'X(?:\^\d+)?').set_parse_action(
        lambda s, loc, t: ExprAST('power', int(t[0][2:]) if '^' in t[0] else 1, loc=loc)
    )
    name = pp.Regex(r'(?!x\d)[a-z]+')
    call = (name + lpar + expr + pp.ZeroOrMore(comma + expr) + rpar).set_parse_action(
        lambda s, loc, t: ExprAST('call', t[0], t[1:], loc=loc)
    )
    group = (lpar + expr + rpar).set_parse_action(
        lambda s, loc, t: ExprAST('group', args=(t[0],), loc=loc)
    )
    atom = call | word | power | group | scalar
    scaled = (number + star + atom).set_parse_action(
        lambda s, loc, t: ExprAST('scale', rational(t[0]), (t[1],), loc=loc)
    )
    term = scaled | atom
    expr <<= (pp.Opt(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(build_sum)
    return expr

def build_sum(s, loc, tokens):
    tokens = list(tokens)
    if not isinstance(tokens[0], str):
        tokens.insert(0, '+')
    signs = tuple(tokens[0::2])
    terms = tuple(tokens[1::2])
    if len(terms) == 1 and signs[0] == '+':
        return terms[0]
    return ExprAST('sum', signs, terms, loc=loc)

grammar = build_grammar()



def byte_offset(text, loc):
    return len(text[:loc].encode('utf-8'))

def validate(ast, text, dim=None):
    """Check function names, arities, and letters against a dimension."""
    if ast.kind == 'call':
        if ast.value not in functions:
            raise ExprSyntaxError('Unknown function "%s"' % ast.value, byte_offset(text, ast.loc))
        low, high = functions[ast.value]
        count = len(ast.args)
        if count < low or (high is not None and count > high):
            raise ExprSyntaxError('Function "%s" takes %s argument%s, got %s' % (
                ast.value, low if low == high else '%s or more' % low,
                '' if low == 1 and high == 1 else 's', count
            ), byte_offset(text, ast.loc))
    elif ast.kind == 'word' and dim is not None:
        for letter in ast.value:
            if letter >= dim:
                raise ExprSyntaxError('Unknown letter x%s for dimension %s' % (letter, dim),
                    byte_offset(text, ast.loc)
                )
    for arg in ast.args:
        validate(arg, text, dim)

def parse(text, dim=None):
    """Parse expression text to an ExprAST, raising ExprSyntaxError on failure."""
    try:
        ast = grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as error:
        raise ExprSyntaxError('Syntax error: %s' % error.msg, byte_offset(text, error.loc))
    validate(ast, text, dim)
    return ast



class Evaluator(object):
    """Evaluates ASTs against one StructureUnderTest."""

    def __init__(self, structure, text=''):
        self.structure = structure
        self.text = text

    def fail(self, node, message, cause=None):
        raise EvalError(message, byte_offset(self.text, node.loc), cause)

    def element(self, node, value):
        """Promote a scalar to a multiple of the unit."""
        if isinstance(value, LinComb):
            return value
        return self.structure.unit().scale(value)

    def evaluate(self, node):
        try:
            return getattr(self, 'eval_' + node.kind)(node)
        except EvalError:
            raise
        except ComPreLieError as error:
            self.fail(node, str(error), error)
        except TypeError as error:
            self.fail(node, str(error), error)

    def eval_sum(self, node):
        total = None
        for sign, term in zip(node.value, node.args):
            value = self.evaluate(term)
            if sign == '-':
                value = -value
            if total is None:
                total = value
            elif isinstance(total, LinComb) or isinstance(value, LinComb):
                total = self.element(node, total) + self.element(node, value)
            else:
                total = total + value
        return total

    def eval_scale(self, node):
        value = self.evaluate(node.args[0])
        if isinstance(value, LinComb):
            return value.scale(node.value)
        return node.value * value

    def eval_scalar(self, node):
        return self.structure.unit().scale(node.value)

    def eval_word(self, node):
        if self.structure.from_word is None:
            self.fail(node, 'Words are not elements of %s; use X^n' % self.structure.name)
        return self.structure.from_word(node.value)

    def eval_power(self, node):
        if self.structure.from_power is None:
            self.fail(node, 'Powers of X are not elements of %s; use words' % self.structure.name)
        return self.structure.from_power(node.value)

    def eval_group(self, node):
        return self.evaluate(node.args[0])

    def eval_call(self, node):
        s = self.structure
        args = [self.evaluate(arg) for arg in node.args]
        name = node.value
        if name == 'eps':
            return s.counit(self.operand(node, args[0]))
        operands = [self.operand(node, arg) for arg in args]
        if name == 'sh':
            result = operands[0]
            for operand in operands[1:]:
                result = s.product(result, operand)
            return result
        elif name == 'hs':
            if s.half_shuffle is None:
                raise MissingHalfShuffle(s.name)
            return s.half_shuffle(*operands)
        elif name == 'pl':
            return s.prelie(*operands)
        elif name == 'br':
            return bracket(s, *operands)
        elif name == 'cop':
            return s.coproduct(operands[0])
        return s.reduced_coproduct(operands[0])

    def operand(self, node, value):
        if isinstance(value, Tensor):
            self.fail(node, 'Function "%s" expects an element, not a tensor' % node.value)
        return self.element(node, value)

def evaluate(structure, ast, text=''):
    return Evaluator(structure, text).evaluate(ast)

def evaluate_element(structure, text):
    """Parse and evaluate text that must denote an element of the structure."""
    ast = parse(text, dim=structure.ctx.dim if structure.from_word is not None else None)
    evaluator = Evaluator(structure, text)
    value = evaluator.evaluate(ast)
    if isinstance(value, Tensor):
        evaluator.fail(ast, 'Expected an element, not a tensor')
    return evaluator.element(ast, value)



def render_value(value, output_format='text'):
    """Render an evaluation result as text or as a JSON-ready object."""
    if output_format == 'json':
        if isinstance(value, LinComb):
            return value.to_json()
        return {'scalar': render_rational(value)}
    if isinstance(value, LinComb):
        return value.render()
    return render_rational(value)
