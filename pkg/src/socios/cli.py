"""Command-line client and demo-stack launcher.

One subcommand per gateway endpoint (generated from the same machine-
readable description the gateway routes from), plus `serve`, `token
put/get`, `fixture mutate` and `health`. Exit codes: 0 when the call
succeeded with an error-free envelope, 1 when the envelope carries
per-query errors, 2 on transport or usage failure.

Configuration precedence: flags > SOCIOS_* environment variables > JSON
config file (--config / SOCIOS_CONFIG).
"""
from __future__ import annotations

import json
import re
import time
from pathlib import Path

import click
import requests

from .adaptors.auth import AuthToken
from .gateway import endpoint_table
from .isotime import iso_to_ms
from .mocknet.fixtures import DEFAULT_SEED
from .stack import DemoStack
from .tokens import TokenStore

DEFAULT_TOKEN_FILE = "~/.socios/tokens.tsv"

_DEMO_SUBJECTS = {"chirper": "u1", "picshare": "p1", "streamhub": "u1"}


def _kebab(name: str) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "-", name).lower()


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        return json.loads(Path(path).expanduser().read_text("utf-8"))
    except FileNotFoundError:
        raise click.ClickException(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"config file {path} is not valid JSON: {exc}")


@click.group()
@click.option("--config", envvar="SOCIOS_CONFIG", default=None,
              help="JSON config file providing defaults for any option.")
@click.option("--gateway-url", default="http://127.0.0.1:8080",
              help="Base URL of the gateway (without the API path).")
@click.option("--token-file", default=DEFAULT_TOKEN_FILE,
              help="Tab-separated token store used by auth commands.")
@click.option("--raw", is_flag=True, help="Print response bodies verbatim.")
@click.pass_context
def main(ctx, config, gateway_url, token_file, raw):
    """Client for the social aggregation gateway."""
    ctx.default_map = _load_config(config)
    # Re-resolve the two group options against the config file defaults;
    # explicit flags and env vars already won at parse time.
    src = ctx.get_parameter_source
    defaults = ctx.default_map or {}
    if src("gateway_url").name == "DEFAULT" and "gateway_url" in defaults:
        gateway_url = defaults["gateway_url"]
    if src("token_file").name == "DEFAULT" and "token_file" in defaults:
        token_file = defaults["token_file"]
    ctx.obj = {
        "gateway_url": gateway_url.rstrip("/"),
        "token_file": str(Path(token_file).expanduser()),
        "raw": raw,
    }


def _print_body(ctx, text: str) -> None:
    if ctx.obj["raw"]:
        click.echo(text)
        return
    try:
        click.echo(json.dumps(json.loads(text), indent=2, ensure_ascii=False))
    except json.JSONDecodeError:
        click.echo(text)


def _resolve_token(ctx, network: str, token: str | None, user: str | None) -> str | None:
    if token:
        return token
    if user:
        store = TokenStore(ctx.obj["token_file"])
        stored = store.get(user, network)
        if stored is None:
            raise click.ClickException(
                f"no live token stored for user {user!r} on {network}")
        return stored.token
    return None


def _call_endpoint(ctx, spec: dict, values: dict) -> None:
    params = {}
    for p in spec["params"]:
        value = values.get(p["name"])
        if value is not None:
            params[p["name"]] = value
    headers = {}
    if spec.get("auth"):
        bearer = _resolve_token(ctx, values.get("sn") or "",
                                values.get("token"), values.get("user"))
        if bearer:
            headers["Authorization"] = f"Bearer {bearer}"
    url = f"{ctx.obj['gateway_url']}/sociosapi/v1/{spec['name']}"
    try:
        resp = requests.request(spec["httpMethod"], url, params=params,
                                headers=headers, timeout=30)
    except requests.RequestException as exc:
        raise click.ClickException(f"gateway unreachable: {exc}")
    _print_body(ctx, resp.text)
    if resp.status_code != 200:
        ctx.exit(2)
    envelope = resp.json()
    ctx.exit(0 if not envelope.get("errors") else 1)


def _register_endpoint_commands() -> None:
    for spec in endpoint_table()["endpoints"]:
        params = spec["params"]

        def make_callback(spec=spec):
            @click.pass_context
            def callback(ctx, **values):
                _call_endpoint(ctx, spec, values)
            return callback

        command = click.Command(
            _kebab(spec["name"]),
            callback=make_callback(),
            help=f"Call the {spec['name']} endpoint.",
            params=[
                click.Option(
                    [f"--{p['name']}"],
                    required=p["required"],
                    help={"list": "comma-separated values",
                          "networkList": "comma-separated network names",
                          "timestamp": "ISO-8601 UTC timestamp",
                          }.get(p["type"], p["type"]),
                )
                for p in params
            ] + ([
                click.Option(["--token"], help="Bearer token passed through to the backend."),
                click.Option(["--user"], help="Local alias whose stored token to use."),
            ] if spec.get("auth") else []),
        )
        main.add_command(command)


_register_endpoint_commands()


@main.command()
@click.option("--gateway-port", default=8080, show_default=True)
@click.option("--chirper-port", default=8101, show_default=True)
@click.option("--picshare-port", default=8102, show_default=True)
@click.option("--streamhub-port", default=8103, show_default=True)
@click.option("--seed", default=DEFAULT_SEED, show_default=True,
              help="Fixture seed; identical seeds give identical datasets.")
@click.pass_context
def serve(ctx, gateway_port, chirper_port, picshare_port, streamhub_port, seed):
    """Start the gateway plus the three mock networks and run until killed."""
    stack = DemoStack.launch(
        seed=seed,
        gateway_port=gateway_port,
        mock_ports={"chirper": chirper_port, "picshare": picshare_port,
                    "streamhub": streamhub_port},
    )
    for name, server in stack.mocks.items():
        click.echo(f"{name} mock listening at {server.url} (admin under /_admin)")
    click.echo(f"gateway listening at {stack.gateway.base_url}")
    click.echo("demo tokens (3600 s):")
    for name, subject in _DEMO_SUBJECTS.items():
        grant = stack.issue_token(name, subject)
        click.echo(f"demo-token network={name} subject={subject} token={grant.token}")
    click.echo("ready", nl=True)
    try:
        while True:
            time.sleep(3600)
    except KeyboardInterrupt:
        pass
    finally:
        stack.stop()


@main.group()
def token():
    """Manage locally stored user tokens."""


@token.command("put")
@click.option("--user", required=True, help="Local alias owning the token.")
@click.option("--network", required=True)
@click.option("--token", "token_value", required=True)
@click.option("--subject", required=True, help="Backend-native user id.")
@click.option("--expires", default="-",
              help='ISO-8601 UTC expiry, or "-" for unknown.')
@click.pass_context
def token_put(ctx, user, network, token_value, subject, expires):
    """Store or overwrite a token for (user, network)."""
    expires_ms = None if expires == "-" else iso_to_ms(expires)
    store = TokenStore(ctx.obj["token_file"])
    store.put(user, AuthToken(token=token_value, network=network,
                              subject=subject, expires_at_ms=expires_ms))
    click.echo(f"stored token for {user} on {network}")


@token.command("get")
@click.option("--user", required=True)
@click.option("--network", required=True)
@click.pass_context
def token_get(ctx, user, network):
    """Print the stored token for (user, network); exits 1 when absent."""
    store = TokenStore(ctx.obj["token_file"])
    stored = store.get(user, network)
    if stored is None:
        click.echo(f"no live token for {user} on {network}", err=True)
        ctx.exit(1)
    click.echo(json.dumps({
        "user": user, "network": network, "token": stored.token,
        "subject": stored.subject,
        "expiresAt": None if stored.expires_at_ms is None else stored.expires_at_ms,
    }, indent=2))


@main.group()
def fixture():
    """Inspect or mutate mock-network fixture state."""


@fixture.command("mutate")
@click.option("--network", required=True)
@click.option("--op", "op_name", required=True,
              type=click.Choice(["add-media", "delete-media"]))
@click.option("--owner", default=None, help="Owner id for add-media.")
@click.option("--text", default=None, help="Text/title for add-media.")
@click.option("--id", "target_id", default=None, help="Target id for delete-media.")
@click.pass_context
def fixture_mutate(ctx, network, op_name, owner, text, target_id):
    """Apply a mutation to a mock backend (resolved via gateway health)."""
    endpoint = _mock_endpoint(ctx, network)
    payload: dict = {"op": op_name.replace("-", "_")}
    if owner is not None:
        payload["owner"] = owner
    if text is not None:
        payload["text"] = text
    if target_id is not None:
        payload["id"] = target_id
    try:
        resp = requests.post(f"{endpoint}/_admin/mutate", json=payload, timeout=30)
    except requests.RequestException as exc:
        raise click.ClickException(f"mock network unreachable: {exc}")
    _print_body(ctx, resp.text)
    ctx.exit(0 if resp.status_code == 200 else 2)


def _mock_endpoint(ctx, network: str) -> str:
    try:
        resp = requests.get(f"{ctx.obj['gateway_url']}/sociosapi/v1/health", timeout=30)
        resp.raise_for_status()
    except requests.RequestException as exc:
        raise click.ClickException(f"gateway unreachable: {exc}")
    for entry in resp.json()["networks"]:
        if entry["name"] == network and entry.get("endpoint"):
            return entry["endpoint"].rstrip("/")
    raise click.ClickException(f"network {network!r} has no reachable endpoint")


@main.command()
@click.pass_context
def health(ctx):
    """Print the gateway's registry summary."""
    try:
        resp = requests.get(f"{ctx.obj['gateway_url']}/sociosapi/v1/health", timeout=30)
    except requests.RequestException as exc:
        raise click.ClickException(f"gateway unreachable: {exc}")
    _print_body(ctx, resp.text)
    ctx.exit(0 if resp.status_code == 200 else 2)


def entrypoint():
    main(auto_envvar_prefix="SOCIOS")


if __name__ == "__main__":
    entrypoint()
