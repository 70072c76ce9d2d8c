"""
This module documents comprelie's command-line interface.
"""

general_options = """
    --config <path>
        Path to a structure configuration file. Without one, commands use
        T(V,f) on two letters with f = 0.
    --cap <degree>
        Total degree up to which laws are checked exhaustively. Laws
        whose clauses take two arguments are checked one degree higher.
        Defaults to the COMPRELIE_CAP environment variable, or 5.
    --format <json|text>
        Write results as JSON objects, one per line, or as text.
        Defaults to text.
    -V, --version
        Display comprelie version and exit.
    -v, --verbose
        Output more information than usual about what comprelie is doing.
    -q, --quiet
        Only log errors, important messages and results, and hide the
        rest. Doesn't affect log file output.
    --silent
        Log nothing to the console, not even results.
        Doesn't affect log file output.
    --log <path>
        Path to a file to log output to."""

config_format = """
    A configuration file holds "key = value" lines. Rationals are written
    like "3" or "-1/2"; vectors separate their entries with spaces or
    commas. The keys are:
    kind
        One of tvf, tvfl, tvstar, sfl, kx_family.
    dim
        Dimension of V, for every kind but kx_family.
    f.<i>
        For tvf, the image of letter i as dim rationals. Missing rows
        are zero.
    form
        For tvfl and sfl, the values of the linear form on the letters.
    star.<i>.<j>
        For tvstar, the product of letters i and j as dim rationals.
        Missing pairs are zero. The table must satisfy the preLie identity.
    lambda
        The scalar lambda for tvfl, sfl and kx_family. Defaults to 0.
    family, N, mu, a, b
        For kx_family: the family (G1, G2, G3, G4 or GPrime) and its
        parameters."""

general = """
Usage:
    comprelie <command> <arguments...> <options...>

Examples:
    comprelie eval "pl(x1x0, x0)" --config fliess.conf
    comprelie eval "cop(x0x1)" --format json
    comprelie check all --config fliess.conf --cap 5
    comprelie classify 5 1/2 1/3 1/4 1/5
    comprelie bracket X^2 X^3 --config g1.conf
    comprelie help
    comprelie help check

Commands:
    eval
        Evaluate an expression in the configured structure.
    check
        Check a suite of laws on the configured structure and report the
        first witness of every law that fails.
    classify
        Decide which family of preLie products on K[X] a prefix of
        lambda values belongs to.
    bracket
        Compute the Lie bracket of two elements.
    help
        Show this help text or, when an additional option is given, more
        detailed help for a command. For example, "comprelie help check".

General Options: %s

Configuration: %s
""" % (general_options, config_format)

eval = """
Usage:
    comprelie eval <expression> <options...>

Examples:
    comprelie eval "pl(x1x0, x0)" --config fliess.conf
    comprelie eval "1/2*x0 + x1"
    comprelie eval "hs(x0, x1) + hs(x1, x0) - sh(x0, x1)"
    comprelie eval "pl(X^2, X^3)" --config g1.conf

Description:
    Parse an expression and evaluate it in the configured structure.
    Words are written as letters like "x0x1"; in a kx_family structure
    write powers of X like "X^3" instead. A bare rational is that
    multiple of the unit. The functions are:
        sh(a, b, ...)   commutative product
        hs(a, b)        half-shuffle
        pl(a, b)        preLie product
        br(a, b)        Lie bracket pl(a, b) - pl(b, a)
        cop(a)          coproduct
        rcop(a)         reduced coproduct
        eps(a)          counit
    Terms are written in length-lexicographic order with exact
    coefficients.

General Options: %s
""" % general_options

check = """
Usage:
    comprelie check <suite> <options...>

Examples:
    comprelie check comprelie --config fliess.conf
    comprelie check all --cap 4 --format json
    comprelie check zinbiel --config tvfl.conf --at x0 --at x1 --at x1

Options:
    --at <expression>
        Check the laws at one given tuple instead of every basis tuple.
        Repeat the option once per argument; only the clauses taking
        that many arguments are checked.

Description:
    Check every law of a suite on all basis tuples up to the cap.
    The suites are:
        comprelie   commutativity and associativity, the preLie identity,
                    the derivation rule, and the unit and counit rules
        zinbiel     the Zinbiel identities of the half-shuffle and their
                    compatibility with the preLie product
        bialgebra   the bialgebra axioms, compatibility of the coproduct
                    with the preLie product and with the half-shuffle,
                    and closure of primitives
        all         every law above, and the Jacobi identity
    Laws that don't apply to the structure are skipped. Exits with status
    1 when any law fails.

General Options: %s
""" % general_options

classify = """
Usage:
    comprelie classify <lambda_0> <lambda_1> ... <options...>

Examples:
    comprelie classify 5 1/2 1/3 1/4 1/5
    comprelie classify 0 0 0 0 --format json

Description:
    Given the values lambda_0 through lambda_M, defining the product
    X^i * X^j = i lambda_j X^(i+j), report the family of preLie products
    the prefix belongs to, the first pair of indices where the preLie
    condition fails, or how long a prefix is needed to decide.

General Options: %s
""" % general_options

bracket = """
Usage:
    comprelie bracket <a> <b> <options...>

Examples:
    comprelie bracket x0 x1x1
    comprelie bracket X X^2 --config g2.conf

Description:
    Compute the Lie bracket pl(a, b) - pl(b, a) of two expressions.

General Options: %s
""" % general_options

help = """
Usage:
    comprelie help <command>

Examples:
    comprelie help
    comprelie help eval

Description:
    Show information and usage instructions for a command, or general usage
    when no command is given.
    The recognized commands are "eval", "check", "classify", "bracket",
    and "help".

General Options: %s
""" % general_options



commands = {
    'eval': eval,
    'check': check,
    'classify': classify,
    'bracket': bracket,
    'help': help,
}
