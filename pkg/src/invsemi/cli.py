"""Command line front door.

Subcommands: close, props, germs, criterion, symbolic.  Reports render
as human text by default or canonical JSON with --format structured;
both are byte-deterministic for a fixed input and flag set.  Exit
codes: 0 success, 2 parse error, 3 budget exhausted, 4 internal
invariant or --verify failure.
"""

from __future__ import annotations

import sys
import time
from functools import wraps

import click

from . import criterion as crit
from . import formats, germs as germs_mod, symbolic
from .action import left_translation_action
from .errors import BudgetExceeded, ContractViolation, InvariantViolation, ParseError
from .report import RunReport, file_digest
from .semigroup import FiniteInverseSemigroup, verify_inverse_semigroup
from .symbolic import atomflip, graphs, munn

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4

MAX_LISTED_ELEMENTS = 100


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _jsonable(value):
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return value


def common_options(f):
    @click.option("--format", "fmt", type=click.Choice(["human", "structured"]),
                  default="human", show_default=True, help="Report rendering.")
    @click.option("--budget", type=int, default=None, envvar="INVSEMI_BUDGET",
                  help="Resource budget (closure elements / subset scans).")
    @click.option("--verify", is_flag=True, default=False,
                  help="Re-run the independent oracles and require agreement.")
    @click.option("--timing", is_flag=True, default=False,
                  help="Print elapsed time to stderr (stdout stays deterministic).")
    @wraps(f)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        try:
            report = f(*args, **kwargs)
        except ParseError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except BudgetExceeded as exc:
            click.echo(f"inconclusive: {exc}", err=True)
            sys.exit(EXIT_BUDGET)
        except (InvariantViolation, ContractViolation) as exc:
            click.echo(f"invariant failure: {exc}", err=True)
            sys.exit(EXIT_INVARIANT)
        if kwargs.get("timing"):
            elapsed = (time.perf_counter() - started) * 1000
            click.echo(f"elapsed_ms={elapsed:.1f}", err=True)
        if report.verified is False:
            click.echo(report.render_structured() if kwargs["fmt"] == "structured"
                       else report.render_text(), nl=False)
            click.echo("verification failed: oracle disagreement", err=True)
            sys.exit(EXIT_INVARIANT)
        click.echo(report.render_structured() if kwargs["fmt"] == "structured"
                   else report.render_text(), nl=False)
        sys.exit(EXIT_OK)
    return wrapper


@click.group()
def main():
    """Finite inverse semigroups, germ groupoids, and cover criteria."""


def _semigroup_summary(S: FiniteInverseSemigroup) -> dict:
    check = verify_inverse_semigroup(S)
    return {
        "order": S.order,
        "idempotent_count": len(S.idempotents),
        "zero": S.zero,
        "is_group": bool(check) and S.is_group,
        "verifier_ok": check.ok,
        "verifier_reason": check.reason,
        "verifier_certificate": list(check.certificate) if check.certificate else None,
    }


def _summary_lines(report: RunReport, stats: dict) -> None:
    zero = stats["zero"] if stats["zero"] is not None else "none"
    report.line(f"order={stats['order']} idempotents={stats['idempotent_count']} "
                f"zero={zero} group={'yes' if stats['is_group'] else 'no'}")
    if stats["verifier_ok"]:
        report.line("verifier: ok")
    else:
        report.line(f"verifier: FAILED ({stats['verifier_reason']}) "
                    f"certificate={stats['verifier_certificate']}")


@main.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@common_options
def close(input_file, fmt, budget, verify, timing):
    """Close a generator file (or load a table file) and verify it."""
    S = formats.load_semigroup(input_file, budget=budget)
    report = RunReport(command="close", input_digest=file_digest(input_file))
    stats = _semigroup_summary(S)
    report.semigroup = stats
    report.line(f"close {input_file}")
    _summary_lines(report, stats)
    if S.labels is not None and S.order <= MAX_LISTED_ELEMENTS:
        report.semigroup["elements"] = [str(S.label(i)) for i in S.elements()]
        report.line("elements:")
        for i in S.elements():
            report.line(f"  {i}: {S.label_str(i)}")
    if verify:
        again = formats.load_semigroup(input_file, budget=budget)
        report.verified = again.mul == S.mul
    return report


@main.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@common_options
def props(input_file, fmt, budget, verify, timing):
    """Batch property flags: unitary variants, completeness, distributivity."""
    S = formats.load_semigroup(input_file, budget=budget)
    report = RunReport(command="props", input_digest=file_digest(input_file))
    stats = _semigroup_summary(S)
    report.semigroup = stats
    report.line(f"props {input_file}")
    _summary_lines(report, stats)
    properties: dict = {"all_idempotent": len(S.idempotents) == S.order}
    if stats["verifier_ok"]:
        unitary = crit.is_e_star_unitary(S)
        completeness = crit.is_complete_and_distributive(S, budget=budget)
        properties.update({
            "unitary_variant": unitary.variant,
            "unitary_ok": unitary.ok,
            "unitary_witness": unitary.witness,
            "complete_and_distributive": completeness.ok,
            "completeness_certificate":
                _jsonable(completeness.certificate) if completeness.certificate else None,
            "subsets_checked": completeness.subsets_checked,
        })
        report.line(f"all elements idempotent: {'yes' if properties['all_idempotent'] else 'no'}")
        witness = "" if unitary.ok else f" witness={S.label_str(unitary.witness)}"
        report.line(f"{unitary.variant}: {'yes' if unitary.ok else 'no'}{witness}")
        report.line(f"complete+distributive: {'yes' if completeness.ok else 'no'} "
                    f"(subsets checked: {completeness.subsets_checked})")
        if verify:
            unitary2 = crit.is_e_star_unitary(S)
            completeness2 = crit.is_complete_and_distributive(S, budget=budget)
            report.verified = (unitary2 == unitary
                               and completeness2.ok == completeness.ok)
    else:
        report.line("algebraic properties skipped: not an inverse semigroup")
    report.properties = properties
    return report


@main.command()
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--self", "self_action", is_flag=True, default=False,
              help="INPUT is a semigroup file; act on itself by left translation.")
@common_options
def germs(input_file, self_action, fmt, budget, verify, timing):
    """Build the germ groupoid of an action (action file, or --self)."""
    if self_action:
        S = formats.load_semigroup(input_file, budget=budget)
        action = left_translation_action(S)
    else:
        action = formats.load_action(input_file, budget=budget)
        S = action.semigroup
    G = germs_mod.build_germs(action)
    iso = G.isotropy()
    report = RunReport(command="germs", input_digest=file_digest(input_file))
    report.semigroup = _semigroup_summary(S)
    report.groupoid = {
        "space_size": action.space_size,
        "germ_count": len(G),
        "unit_count": len(G.units),
        "isotropy_count": len(iso),
        "principal": G.is_principal(),
        "effective": G.is_effective(),
        "essentially_principal": G.is_essentially_principal(),
    }
    report.line(f"germs {input_file}{' --self' if self_action else ''}")
    g = report.groupoid
    report.line(f"space={g['space_size']} germs={g['germ_count']} units={g['unit_count']} "
                f"isotropy={g['isotropy_count']}")
    report.line(f"principal={_yn(g['principal'])} effective={_yn(g['effective'])} "
                f"essentially_principal={_yn(g['essentially_principal'])}")
    if verify:
        report.verified = _verify_germ_classes(action, G)
    return report


def _verify_germ_classes(action, G) -> bool:
    pairs = action.germ_pairs()
    by_point: dict[int, list] = {}
    for s, x in pairs:
        by_point.setdefault(x, []).append(s)
    for x, ss in by_point.items():
        for i, s in enumerate(ss):
            for t in ss[i + 1:]:
                same = G.class_of[(s, x)] == G.class_of[(t, x)]
                if same != germs_mod.germ_equiv_oracle(action, s, t, x):
                    return False
    return True


@main.command()
@click.argument("input_file", required=False,
                type=click.Path(exists=True, dir_okay=False))
@click.option("--family", type=click.Choice(list(symbolic.FAMILIES)), default=None,
              help="Run the symbolic checker instead of a table input.")
@click.option("--element", "element_expr", default=None,
              help="Element expression for --family.")
@click.option("--truncation", type=int, default=None,
              help="Atom-flip truncation bound (atom count).")
@click.option("--rank", type=int, default=2, show_default=True,
              help="Munn rank when parsing cannot infer it.")
@click.option("--graph", "graph_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Graph file for the graph family.")
@common_options
def criterion(input_file, family, element_expr, truncation, rank, graph_file,
              fmt, budget, verify, timing):
    """Finite-cover verdicts: per element of a table, or one symbolic element."""
    if (input_file is None) == (family is None):
        raise ParseError("give exactly one of INPUT_FILE or --family")
    if family is not None:
        if element_expr is None:
            raise ParseError("--family needs --element")
        return _symbolic_report("criterion", family, element_expr, truncation,
                                rank, graph_file, verify)
    S = formats.load_semigroup(input_file, budget=budget)
    check = verify_inverse_semigroup(S)
    if not check.ok:
        raise ParseError(f"{input_file}: not an inverse semigroup "
                         f"({check.reason}, certificate {check.certificate})")
    report = RunReport(command="criterion", input_digest=file_digest(input_file))
    report.semigroup = _semigroup_summary(S)
    report.line(f"criterion {input_file}")
    rows = []
    verified = True
    for s in S.elements():
        verdict = crit.hausdorff_criterion(S, s)
        rows.append({
            "element": s,
            "label": S.label_str(s),
            "j_set": sorted(verdict.j_set),
            "witness": list(verdict.witness),
            "verdict": verdict.verdict,
        })
        report.line(f"  s={s} ({S.label_str(s)}): {verdict.verdict} "
                    f"witness={list(verdict.witness)} |J_s|={len(verdict.j_set)}")
        if verify:
            verified = verified and crit.ideal_cover_agrees_with_order_cover(
                S, s, budget=budget)
    report.criterion = rows
    if verify:
        report.verified = verified
    return report


@main.command()
@click.argument("family", type=click.Choice(list(symbolic.FAMILIES)))
@click.argument("element_expr")
@click.option("--truncation", type=int, default=None,
              help="Atom-flip truncation bound (atom count).")
@click.option("--rank", type=int, default=2, show_default=True,
              help="Munn rank when parsing cannot infer it.")
@click.option("--graph", "graph_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Graph file for the graph family.")
@common_options
def symbolic_cmd(family, element_expr, truncation, rank, graph_file,
                 fmt, budget, verify, timing):
    """Criterion verdict for one element of a countable family."""
    return _symbolic_report("symbolic", family, element_expr, truncation,
                            rank, graph_file, verify)


main.add_command(symbolic_cmd, name="symbolic")


def _symbolic_report(command, family, element_expr, truncation, rank,
                     graph_file, verify) -> RunReport:
    if family == "atomflip":
        element = atomflip.parse(element_expr)
        rep = atomflip.criterion(element, truncation_atoms=truncation)
    elif family == "munn":
        word_rank, word = munn.parse_word(element_expr)
        element = munn.MunnTreeElement.from_word(max(word_rank, rank), word)
        rep = munn.criterion(element)
    else:
        g = formats.load_graph(graph_file) if graph_file else graphs.fixture_graph()
        element = graphs.parse(g, element_expr)
        rep = graphs.criterion(element)

    report = RunReport(command=command)
    payload: dict = {
        "family": rep.family,
        "element": rep.element,
        "j_set": rep.j_set_description,
        "verdict": rep.verdict,
        "witness": list(rep.witness_strings()) if rep.witness is not None else None,
    }
    report.line(f"{command} {family} '{element_expr}'")
    report.line(f"element: {rep.element}")
    report.line(f"J_s: {rep.j_set_description}")
    report.line(f"verdict: {rep.verdict}")
    if rep.witness is not None:
        report.line(f"witness: [{', '.join(rep.witness_strings())}]")
    if rep.antichain is not None:
        sample = [str(rep.antichain.member(i)) for i in range(1, 5)]
        payload["antichain"] = {"description": rep.antichain.description,
                                "sample": sample}
        report.line(f"antichain: {rep.antichain.description}")
        report.line(f"  sample: {', '.join(sample)}, ...")
    report.symbolic = payload
    if verify:
        report.verified = _verify_symbolic(family, element, rep, truncation)
    return report


def _verify_symbolic(family, element, rep, truncation) -> bool:
    if rep.antichain is not None:
        members = [rep.antichain.member(i) for i in range(1, 9)]
        mul = {"atomflip": atomflip.multiply,
               "munn": munn.multiply,
               "graph": graphs.multiply}[family]
        for i, a in enumerate(members):
            if mul(element, a) != a:
                return False
            for b in members[i + 1:]:
                prod = mul(a, b)
                if family == "atomflip" and prod != atomflip.ZERO:
                    return False
        return True
    if rep.witness is None:
        return False
    if family == "atomflip" and truncation is not None:
        S = atomflip.truncation(truncation)
        labels = {el: i for i, el in enumerate(S.labels)}
        verdict = crit.hausdorff_criterion(S, labels[element])
        return tuple(S.labels[f] for f in verdict.witness) == rep.witness
    mul = {"atomflip": atomflip.multiply,
           "munn": munn.multiply,
           "graph": graphs.multiply}[family]
    return all(mul(element, f) == f for f in rep.witness)


if __name__ == "__main__":
    main()
