"""
This module implements a command-line interface for comprelie.

Exit status is 0 on success, 1 when a checked law fails, and 2 for usage,
configuration, parse, and evaluation errors.
"""

import os, sys, json, argparse

from . import usage
from . import laws
from . import __versionstr__
from .algebra import rational
from .config import StructureConfig
from .detail import SuiteDetail
from .expr import parse, evaluate, evaluate_element, render_value
from .logger import Logger
from .polyx import classify
from .errors import ComPreLieError, ConfigError



default_cap = 5

# Single-dash flags. Any other token starting with one dash, like "-1/2",
# is a command argument.
short_flags = ('-v', '-q', '-V')

def is_option(token):
    return token.startswith('--') or token in short_flags



class Arguments(object):
    def __init__(self, path, command, args, options):
        # Path to the script
        self.path = path
        # The command to run, e.g. "comprelie [check]"
        self.command = command
        # Command-specific arguments, e.g. "comprelie check [all]"
        self.args = args
        # Trailing options and flags, e.g. "comprelie check all [--cap 4]"
        self.options = options
        # Persistent Logger instance.
        self.logger = None
        # Structure built from the configuration, on first use.
        self.structure = None

    def get_logger(self):
        if self.logger is None:
            self.logger = Logger(
                path=self.options.log,
                verbose=self.options.verbose,
                quiet=self.options.quiet,
                silent=self.options.silent,
            )
        return self.logger

    def get_structure(self):
        if self.structure is None:
            logger = self.get_logger()
            if self.options.config:
                logger.debug('Loading structure configuration "%s".', self.options.config)
                config = StructureConfig.load(self.options.config)
            else:
                logger.debug('No configuration given; using T(V,f) with dim 2 and f = 0.')
                config = StructureConfig.default()
            self.structure = config.structure()
            logger.debug('Using structure %s.', self.structure.name)
        return self.structure

    def get_cap(self):
        if self.options.cap is not None:
            return self.options.cap
        value = os.environ.get('COMPRELIE_CAP')
        if not value:
            return default_cap
        try:
            cap = int(value)
        except ValueError:
            raise ConfigError('COMPRELIE_CAP must be an integer, got "%s".' % value)
        if cap < 1:
            raise ConfigError('COMPRELIE_CAP must be positive, got %s.' % cap)
        return cap

    def emit(self, value):
        """Write one result, rendered in the selected format."""
        logger = self.get_logger()
        if self.options.format == 'json':
            logger.emit(json.dumps(value['json']))
        else:
            logger.emit('%s', value['text'])

    @classmethod
    def parse(cls, args=None, path=None):
        args = sys.argv[1:] if args is None else args
        path = sys.argv[0] if path is None else path
        i = 0
        while i < len(args):
            if is_option(args[i]):
                break
            else:
                i += 1
        command_args = args[:i]
        command = command_args[0] if command_args else None
        options_args = args[i:]
        options = cls.options_parser(command).parse_args(options_args)
        return cls(path, command, command_args[1:i], options)

    @staticmethod
    def options_parser(command=None):
        parser = argparse.ArgumentParser(usage=usage.general, add_help=False)
        parser.add_argument('--config', type=str, default='')
        parser.add_argument('--cap', type=positive_int, default=None)
        parser.add_argument('--at', action='append', default=None)
        parser.add_argument('--format', choices=('json', 'text'), default='text')
        parser.add_argument('-q', '--quiet', action='store_true')
        parser.add_argument('-v', '--verbose', action='store_true')
        parser.add_argument('-V', '--version', action='store_true')
        parser.add_argument('--log', type=str, default='')
        parser.add_argument('--silent', action='store_true')
        return parser

    def enforce_command_args(self, min_args, max_args=None):
        """Check the argument count; max_args of None means no upper bound."""
        if len(self.args) < min_args or (max_args is not None and len(self.args) > max_args):
            self.get_logger().error('Invalid number of command arguments.')
            print(usage.commands[self.command])
            return False
        else:
            return True

def positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be a positive integer, got %s' % value)
    return value



def __main__(args=None):
    if args is None or isinstance(args, list):
        args = Arguments.parse(args)
    try:
        if args.options.version:
            return version(args)
        elif args.command is None:
            print(usage.general)
            return 0
        elif args.command not in commands:
            args.get_logger().error('Unknown command "%s".', args.command)
            print(usage.general)
            return 2
        else:
            return commands[args.command](args)
    except ComPreLieError as error:
        args.get_logger().error('%s', error)
        return 2
    finally:
        if args.logger is not None:
            args.logger.close()



def show_help(args):
    if len(args.args) == 0:
        print(usage.general)
    elif args.args[0] in usage.commands:
        print(usage.commands[args.args[0]])
    else:
        print('Unknown command "%s".' % args.args[0])
        print(usage.help)
        return 2
    return 0



def version(args):
    args.get_logger().emit(
        'Running comprelie version %s from path "%s".',
        __versionstr__, os.path.abspath(args.path)
    )
    return 0



def evaluate_text(args, text):
    s = args.get_structure()
    ast = parse(text, dim=s.ctx.dim if s.from_word is not None else None)
    args.get_logger().debug('Parsed expression %s.', ast.render())
    value = evaluate(s, ast, text)
    args.emit({
        'json': render_value(value, 'json'),
        'text': render_value(value, 'text'),
    })
    return 0

def eval_expression(args):
    if not args.enforce_command_args(1):
        return 2
    return evaluate_text(args, ' '.join(args.args))

def bracket(args):
    if not args.enforce_command_args(2, 2):
        return 2
    return evaluate_text(args, 'br(%s, %s)' % tuple(args.args))



def check(args):
    if not args.enforce_command_args(1, 1):
        return 2
    logger = args.get_logger()
    suite = args.args[0]
    if suite not in laws.suites:
        logger.error('Unknown suite "%s"; expected one of %s.',
            suite, ', '.join(sorted(laws.suites))
        )
        return 2
    s = args.get_structure()
    cap = args.get_cap()
    candidates = None
    if args.options.at:
        arguments = tuple(evaluate_element(s, text) for text in args.options.at)
        candidates = [arguments]
        logger.log('Checking suite "%s" on %s at (%s).', suite, s.name,
            ', '.join(argument.render() for argument in arguments)
        )
    else:
        logger.log('Checking suite "%s" on %s with cap %s.', suite, s.name, cap)
    detail = SuiteDetail(logger)
    for report in laws.run_suite(s, suite, cap, logger, candidates):
        detail.add(report)
        args.emit({'json': report.to_json(), 'text': report.render()})
    detail.report()
    return 1 if detail.any_failed else 0



def classify_prefix(args):
    if not args.enforce_command_args(1):
        return 2
    try:
        values = [rational(value) for value in args.args]
    except (ValueError, ZeroDivisionError) as error:
        args.get_logger().error('%s', error)
        return 2
    result = classify(values)
    args.emit({'json': result.to_json(), 'text': result.render()})
    return 0



commands = {
    'eval': eval_expression,
    'check': check,
    'classify': classify_prefix,
    'bracket': bracket,
    'help': show_help,
}



if __name__ == '__main__':
    sys.exit(__main__())
