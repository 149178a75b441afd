#!/usr/bin/env python
"""
Smoke test for module imports.

Walks the ``src`` package and imports every module it finds, so a new
module cannot be added with a broken import.
"""
import importlib
import os
import pkgutil
import sys

# Add project root to path for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Importing __main__ would run the CLI.
SKIP = {"src.cli.__main__"}


def discover_modules(package_name="src"):
    """List the package and all of its submodules, sorted."""
    package = importlib.import_module(package_name)
    names = [package_name]
    for info in pkgutil.walk_packages(package.__path__, prefix=f"{package_name}."):
        if info.name not in SKIP:
            names.append(info.name)
    return sorted(names)


def try_import(module_name):
    """Import one module and report the outcome."""
    try:
        importlib.import_module(module_name)
        print(f"✓ {module_name}")
        return True
    except Exception as e:
        print(f"❌ {module_name}: {e}")
        return False


def main():
    """Import every discovered module."""
    print("=" * 60)
    print("Running smoke import tests...")
    print("=" * 60)

    try:
        modules = discover_modules()
    except Exception as e:
        print(f"❌ src: {e}")
        return 1

    failed = [m for m in modules if not try_import(m)]

    print("=" * 60)
    print(f"Results: {len(modules) - len(failed)}/{len(modules)} modules imported successfully")
    if failed:
        print(f"❌ {len(failed)} modules failed to import")
        return 1
    print("✓ All modules imported successfully")
    return 0


if __name__ == "__main__":
    sys.exit(main())
