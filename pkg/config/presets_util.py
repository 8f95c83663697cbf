import json
import sys

import click
from rich import print
from rich.panel import Panel
from rich.table import Table

from core.errors import BecQubitsError
from config.run_config import PRESETS_PATH, build_run_config, load_presets


@click.group()
def presets():
    """Manage the named parameter presets."""
    pass


@presets.command("list")
def list_presets():
    """List available presets."""
    table = Table(title="Parameter Presets")
    table.add_column("Name", style="cyan")
    table.add_column("Block", style="magenta")
    table.add_column("Description", style="white")
    for name, preset in sorted(load_presets().items()):
        block = "dimensionless" if "u" in preset["parameters"] else "physical"
        table.add_row(name, block, preset.get("description", ""))
    print(table)


@presets.command()
@click.argument("name")
def view(name):
    """Show the parameters of preset NAME and their dimensionless form."""
    entries = load_presets()
    if name not in entries:
        print(f":warning: [yellow]Unknown preset '{name}'[/yellow]")
        sys.exit(3)
    parameters = entries[name]["parameters"]
    block = "dimensionless" if "u" in parameters else "physical"
    reservoir = build_run_config({block: parameters, "scenario": "rates"}).reservoir()
    body = json.dumps(parameters, indent=4) + "\n\n" + json.dumps(reservoir.as_dict(), indent=4)
    print(Panel(body, title=f"Preset {name}"))


@presets.command()
def validate():
    """Validate presets.json structure and parameter domains."""
    errors = []
    try:
        entries = load_presets()
    except (BecQubitsError, json.JSONDecodeError) as e:
        entries = {}
        errors.append(str(e))

    for name, preset in entries.items():
        if "parameters" not in preset:
            errors.append(f"{name}: missing 'parameters'")
            continue
        block = "dimensionless" if "u" in preset["parameters"] else "physical"
        try:
            build_run_config({block: preset["parameters"], "scenario": "rates"}).reservoir()
        except BecQubitsError as e:
            errors.append(f"{name}: {e}")

    if errors:
        print(Panel("\n".join(errors), title="[red]Validation Failed[/red]", border_style="red"))
        sys.exit(3)
    else:
        print(Panel(f":white_check_mark: [green]{len(entries)} presets valid ({PRESETS_PATH.name})[/green]",
                    title="Validation Passed", border_style="green"))


if __name__ == "__main__":
    presets()
