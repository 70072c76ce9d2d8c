"""
This module implements the logger used by comprelie.

Log messages are written to stderr and results to stdout, so that the
results of a command can be piped without interleaved chatter. Every line
that reaches the console, and every line hidden from it by --quiet or
--silent, is also appended to the log file when one is set.
"""

import sys, traceback, datetime

# colorama only makes the console prettier; without it lines are plain.
try:
    import colorama
    styles = {
        'debug': colorama.Fore.CYAN,
        'error': colorama.Fore.RED + colorama.Style.BRIGHT,
        'important': colorama.Fore.YELLOW + colorama.Style.BRIGHT,
    }
    reset = colorama.Style.RESET_ALL
except ImportError:
    colorama = None
    styles = {}
    reset = ''



class Logger(object):
    """
    Console and log file output. Verbose enables debug lines, quiet hides
    ordinary log lines, and silent hides everything from the console,
    results included. None of the three affect the log file.
    """

    def __init__(self, path=None, verbose=False, quiet=False, silent=False,
        stdout=None, stderr=None
    ):
        if colorama is not None:
            colorama.init()
        self.verbose = verbose
        self.quiet = quiet
        self.silent = silent
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.path = None
        self.output_file = None
        self.set_path(path)

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def set_path(self, path):
        self.close()
        self.path = path
        if path:
            self.output_file = open(path, 'a')
            started = datetime.datetime.now(datetime.timezone.utc)
            self.output_file.write('Beginning comprelie log from %s.\n' % (
                started.strftime('%Y-%m-%dT%H:%M:%SZ')
            ))

    def close(self):
        if self.output_file is not None:
            self.output_file.close()
            self.output_file = None

    def write(self, line, console, stream=None, style=None):
        """Write one formatted line to the console and the log file."""
        if console and not self.silent:
            if style in styles:
                (stream or self.stderr).write(styles[style] + line + reset + '\n')
            else:
                (stream or self.stderr).write(line + '\n')
        if self.output_file is not None:
            self.output_file.write(line + '\n')

    @staticmethod
    def format(text, args):
        return text % args if args else text

    def log(self, text, *args):
        self.write(self.format(text, args), not self.quiet)

    def debug(self, text, *args):
        """Only shown when verbose."""
        if self.verbose:
            self.write(self.format(text, args), not self.quiet, style='debug')

    def error(self, text, *args):
        self.write(self.format(text, args), True, style='error')

    def important(self, text, *args):
        self.write(self.format(text, args), True, style='important')

    def exception(self, text, *args):
        """Log an error followed by the traceback being handled."""
        self.error(text, *args)
        self.write(traceback.format_exc().rstrip(), True)

    def emit(self, text, *args):
        """
        Write a result line to stdout. Results ignore quiet; only silent
        hides them.
        """
        self.write(self.format(text, args), True, stream=self.stdout)
