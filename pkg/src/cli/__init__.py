"""CLI package for Ring Gate.

This package provides the command-line interface:
- main: Entry point, global options and exit-code handling

Commands are organized by function:
- Single point: tmatrix
- Exploration: scan, curves, lossless
- Composition: compose
- Conversion: units

Example:
    $ ringgate units --radius 0.25e-6 --mass-ratio 0.023 --energy 11.13e-3
    $ ringgate tmatrix --ka 20.4 --x 1.0 --gamma pi
    $ ringgate curves --gamma 0.5pi --output curves.csv
"""

from .main import cli, main, run

__all__ = ['cli', 'main', 'run']
