#!/usr/bin/env python3
import invol.cli as cli

def main():
    cli.cli(obj={})

if __name__ == '__main__':
    main()
