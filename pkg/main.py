#!/usr/bin/env python3
"""Main application entry point for Ring Gate."""

from src.cli import main

if __name__ == '__main__':
    main()
