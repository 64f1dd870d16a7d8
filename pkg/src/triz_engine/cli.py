"""Command-line front over the whole engine.

Exit codes: 0 success, 1 domain error, 2 usage error.  Every subcommand
takes --json for machine-readable stdout.  Replay transcripts resolve via
TRIZ_ENGINE_TRANSCRIPT_DIR, so nothing here needs credentials when
TRIZ_ENGINE_LLM_MODE=replay.
"""

from __future__ import annotations

import json as jsonlib
import math
import sys
from pathlib import Path

import click

from .errors import TrizEngineError
from .evaluation import (
    case_by_id,
    evaluate_case,
    evaluation_to_dict,
    load_case_base,
    write_evaluation,
)
from .gateway import Gateway, ProviderConfig
from .kb import Contradiction, load_knowledge_base, validate_knowledge_base
from .pipeline import PipelineOverrides, ProblemInput, run_pipeline, run_trials
from .reporting import content_from_report_doc, render
from .service.jobs import serialize_report


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _echo_json(payload):
    click.echo(jsonlib.dumps(payload, indent=1, ensure_ascii=False))


def _gateway() -> Gateway:
    return Gateway(ProviderConfig.from_env())


def _parse_contradiction(text: str) -> Contradiction:
    try:
        improving, worsening = text.replace(",", ":").split(":")
        return Contradiction(int(improving), int(worsening))
    except ValueError as exc:
        raise click.UsageError(
            "--override-contradiction expects IMPROVING:WORSENING") from exc


@click.group()
def main():
    """TRIZ problem-solving engine."""


@main.command()
@click.option("--input", "input_path", type=click.Path(path_type=Path),
              help="Problem statement file; stdin when omitted.")
@click.option("--case", "case_id", help="Use a case-base problem statement.")
@click.option("--override-contradiction", metavar="I:W",
              help="Skip detection and use this (improving, worsening) pair.")
@click.option("--override-principles", metavar="A,B,...",
              help="Skip the matrix lookup and apply these principles.")
@click.option("--override-problem", help="Skip distillation and use this text.")
@click.option("--format", "fmt", type=click.Choice(["md", "tex", "json"]),
              default="md", show_default=True)
@click.option("--output", type=click.Path(path_type=Path),
              help="Write the document here instead of stdout.")
@click.option("--seed", type=int, default=None)
@click.option("--json", "as_json", is_flag=True, help="Emit the full report as JSON.")
def solve(input_path, case_id, override_contradiction, override_principles,
          override_problem, fmt, output, seed, as_json):
    """Run the four-step reasoning flow over one problem statement."""
    try:
        if case_id:
            text = case_by_id(load_case_base(), case_id).problem_statement
        elif input_path:
            text = input_path.read_text()
        else:
            text = sys.stdin.read()

        overrides = PipelineOverrides(
            problem=override_problem,
            contradiction=(_parse_contradiction(override_contradiction)
                           if override_contradiction else None),
            principles=([int(p) for p in override_principles.split(",")]
                        if override_principles else None),
        )
        kb = load_knowledge_base()
        report = run_pipeline(_gateway(), ProblemInput(text), kb, overrides, seed=seed)

        if as_json or fmt == "json":
            doc = serialize_report(report)
            if output:
                output.write_text(jsonlib.dumps(doc, indent=1, ensure_ascii=False) + "\n")
                click.echo(str(output))
            else:
                _echo_json(doc)
            return
        rendered = render(report.summary, "markdown" if fmt == "md" else "latex")
        if output:
            output.write_text(rendered)
            click.echo(str(output))
        else:
            click.echo(rendered, nl=False)
    except TrizEngineError as exc:
        _fail(str(exc))


@main.command()
@click.option("--n", type=int, required=True, help="Number of trials.")
@click.option("--case", "case_id", help="Case-base problem to analyze.")
@click.option("--input", "input_path", type=click.Path(path_type=Path))
@click.option("--json", "as_json", is_flag=True)
def trials(n, case_id, input_path, as_json):
    """Repeat distill+identify N times and tally the detected contradictions."""
    try:
        if case_id:
            text = case_by_id(load_case_base(), case_id).problem_statement
        elif input_path:
            text = input_path.read_text()
        else:
            raise click.UsageError("trials needs --case or --input")
        kb = load_knowledge_base()
        distribution = run_trials(_gateway(), ProblemInput(text), kb, n)
        rows = sorted(distribution.counts.items(),
                      key=lambda kv: (-kv[1], kv[0].as_tuple()))
        if as_json:
            _echo_json({
                "n_requested": distribution.n_requested,
                "failures": distribution.failures,
                "counts": [{"improving": c.improving, "worsening": c.worsening,
                            "count": count} for c, count in rows],
            })
        else:
            click.echo(f"trials: {n}  counted: {distribution.n_counted}  "
                       f"failures: {distribution.failures}")
            for c, count in rows:
                click.echo(f"  ({c.improving:2d},{c.worsening:2d})  {count}")
    except TrizEngineError as exc:
        _fail(str(exc))


@main.command()
@click.option("--case", "case_id", required=True)
@click.option("--n", type=int, default=100, show_default=True)
@click.option("--k", type=int, default=3, show_default=True)
@click.option("--out", type=click.Path(path_type=Path),
              help="Directory for eval/<id>.json and CSV output.")
@click.option("--json", "as_json", is_flag=True)
def evaluate(case_id, n, k, out, as_json):
    """Trial a case and score its detections against the expert reference."""
    try:
        kb = load_knowledge_base()
        cases = load_case_base()
        case = case_by_id(cases, case_id)
        distribution = run_trials(_gateway(), ProblemInput(case.problem_statement),
                                  kb, n)
        evaluation = evaluate_case(case, distribution, k)
        if out:
            json_path, csv_path = write_evaluation(out, evaluation, distribution)
            click.echo(f"{json_path}\n{csv_path}")
        if as_json or not out:
            _echo_json(evaluation_to_dict(evaluation))
    except TrizEngineError as exc:
        _fail(str(exc))


@main.group()
def kb():
    """Knowledge-base commands."""


@kb.command("validate")
@click.option("--bundle", type=click.Path(path_type=Path),
              help="Bundle directory; the shipped bundle when omitted.")
@click.option("--json", "as_json", is_flag=True)
def kb_validate(bundle, as_json):
    """Check every knowledge-base invariant; exit 0 iff clean."""
    try:
        kb_obj = load_knowledge_base(bundle)
    except TrizEngineError as exc:
        _fail(str(exc))
    report = validate_knowledge_base(kb_obj)
    if as_json:
        _echo_json({"violations": list(report)})
    else:
        for violation in report:
            click.echo(violation)
        click.echo(f"{len(report)} violation(s)")
    if report:
        sys.exit(1)


@kb.command("lookup")
@click.argument("improving", type=int)
@click.argument("worsening", type=int)
@click.option("--json", "as_json", is_flag=True)
def kb_lookup(improving, worsening, as_json):
    """Show the matrix cell for an (improving, worsening) pair."""
    try:
        principles = load_knowledge_base().lookup(improving, worsening)
    except TrizEngineError as exc:
        _fail(str(exc))
    if as_json:
        _echo_json([{"index": p.index, "title": p.title} for p in principles])
    else:
        for p in principles:
            click.echo(p.serialize())


@main.group()
def report():
    """Report document commands."""


@report.command("render")
@click.option("--report", "report_path", type=click.Path(path_type=Path),
              required=True, help="Stored report JSON document.")
@click.option("--format", "fmt", type=click.Choice(["md", "tex"]), default="md",
              show_default=True)
@click.option("--templates", "template_dir", type=click.Path(path_type=Path),
              help="Directory with report.md.tmpl / report.tex.tmpl overrides.")
@click.option("--output", type=click.Path(path_type=Path))
@click.option("--json", "as_json", is_flag=True)
def report_render(report_path, fmt, template_dir, output, as_json):
    """Re-render a persisted report document."""
    try:
        doc = jsonlib.loads(report_path.read_text())
        content = content_from_report_doc(doc, load_knowledge_base())
        rendered = render(content, "markdown" if fmt == "md" else "latex",
                          template_dir=template_dir)
    except TrizEngineError as exc:
        _fail(str(exc))
    if output:
        output.write_text(rendered)
        click.echo(str(output))
    elif as_json:
        _echo_json({"report_id": doc.get("id"), "format": fmt,
                    "document": rendered})
    else:
        click.echo(rendered, nl=False)


@main.group()
def btms():
    """Battery thermal case-study numerics."""


@btms.command("metrics")
@click.option("--v-batt", type=float, required=True, help="Battery volume, L.")
@click.option("--v-module", type=float, required=True, help="Module volume, L.")
@click.option("--e-batt", type=float, required=True, help="Module energy, Wh.")
@click.option("--json", "as_json", is_flag=True)
def btms_metrics(v_batt, v_module, e_batt, as_json):
    """Grouping efficiency and volumetric energy density for one module."""
    from .btms import ModuleGeometry, grouping_efficiency, volumetric_energy_density
    try:
        geometry = ModuleGeometry(v_batt, v_module, e_batt)
    except ValueError as exc:
        _fail(str(exc))
    e_g = grouping_efficiency(geometry)
    se_v = volumetric_energy_density(geometry)
    if as_json:
        _echo_json({"e_g": e_g, "e_g_percent": round(100 * e_g),
                    "se_v_wh_per_l": se_v})
    else:
        click.echo(f"e_g  = {e_g:.4f} ({100 * e_g:.0f}%)")
        click.echo(f"SE_V = {se_v:.1f} Wh/L")


@btms.command("simulate")
@click.option("--c-rate", type=float, default=3.0, show_default=True)
@click.option("--theta", type=float, default=None,
              help="Contact angle, degrees; overrides the spec file.")
@click.option("--spec", "spec_path", type=click.Path(path_type=Path),
              help="Assembly spec document (btms/<name>.json); built-in defaults otherwise.")
@click.option("--duration", type=float, default=None, help="Seconds; default full discharge.")
@click.option("--dt", type=float, default=None, help="Step, s; default from stability bound.")
@click.option("--csv", "csv_path", type=click.Path(path_type=Path),
              help="Write the battery temperature history as CSV.")
@click.option("--json", "as_json", is_flag=True)
def btms_simulate(c_rate, theta, spec_path, duration, dt, csv_path, as_json):
    """Integrate one constant-rate discharge of the flat-heat-pipe module."""
    import csv as csvlib

    from .btms import AssemblySpec, load_assembly, simulate_discharge
    from dataclasses import replace
    try:
        spec = load_assembly(spec_path) if spec_path else AssemblySpec()
        if theta is not None:
            spec = replace(spec, geometry=spec.geometry.with_contact_angle(
                math.radians(theta)))
        result = simulate_discharge(spec, c_rate, duration=duration, dt=dt)
        theta = math.degrees(spec.geometry.contact_angle)
    except (TrizEngineError, ValueError) as exc:
        _fail(str(exc))
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            writer = csvlib.writer(fh)
            n_cells = result.battery_temps.shape[1]
            writer.writerow(["time_s"] + [f"cell{i+1}_K" for i in range(n_cells)])
            writer.writerows(result.as_rows())
        click.echo(str(csv_path))
    summary = {
        "c_rate": c_rate,
        "theta_deg": theta,
        "final_max_temp_c": result.final_max_temp - 273.15,
        "max_temp_c": result.max_temp - 273.15,
        "max_temp_diff_k": result.max_temp_diff,
    }
    if as_json:
        _echo_json(summary)
    else:
        click.echo(f"final max temp: {summary['final_max_temp_c']:.2f} C  "
                   f"(spread {summary['max_temp_diff_k']:.3f} K)")


@btms.command("sweep")
@click.option("--thetas", default="10,20,30,45", show_default=True,
              help="Contact angles, degrees, comma-separated.")
@click.option("--c-rates", default="0.5,1,2,3", show_default=True)
@click.option("--spec", "spec_path", type=click.Path(path_type=Path),
              help="Assembly spec document; built-in defaults otherwise.")
@click.option("--duration", type=float, default=None)
@click.option("--dt", type=float, default=None)
@click.option("--csv", "csv_path", type=click.Path(path_type=Path))
@click.option("--json", "as_json", is_flag=True)
def btms_sweep(thetas, c_rates, spec_path, duration, dt, csv_path, as_json):
    """Grid of final max temperature over contact angle and C-rate."""
    import csv as csvlib

    from .btms import AssemblySpec, load_assembly, sweep_contact_angle
    try:
        spec = load_assembly(spec_path) if spec_path else AssemblySpec()
        theta_list = [math.radians(float(x)) for x in thetas.split(",")]
        rate_list = [float(x) for x in c_rates.split(",")]
        rows = sweep_contact_angle(spec, theta_list, rate_list,
                                   duration=duration, dt=dt)
    except (TrizEngineError, ValueError) as exc:
        _fail(str(exc))
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            writer = csvlib.DictWriter(fh, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        click.echo(str(csv_path))
    if as_json:
        _echo_json(rows)
    elif not csv_path:
        for row in rows:
            click.echo(f"c_rate {row['c_rate']:>4}  theta {row['theta_deg']:5.1f}  "
                       f"final max {row['final_max_temp_c']:7.3f} C")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=None,
              help="Default TRIZ_ENGINE_PORT or 8763.")
@click.option("--data-dir", type=click.Path(path_type=Path), default=None)
@click.option("--frontend", type=click.Path(path_type=Path), default=None,
              help="Static frontend bundle to serve at /.")
def serve(host, port, data_dir, frontend):
    """Run the HTTP service."""
    from .service import create_app
    from .service.app import serve as run_server
    try:
        app = create_app(data_dir=data_dir, frontend_dir=frontend)
    except TrizEngineError as exc:
        _fail(str(exc))
    run_server(app, host=host, port=port)


if __name__ == "__main__":
    main()
