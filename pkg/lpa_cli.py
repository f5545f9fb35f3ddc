"""
Command-line entry point

Run with: python lpa_cli.py props R1
"""
from lpa_toolkit.error_handlers import main


if __name__ == '__main__':
    main()
