use anyhow::Result;
use clap::{Args, ValueEnum};
use climb_core::analysis::{
    degree_bound_report, gradient, gradient_by_evaluation, lexicographic_order, odd_entries_changed_below,
    origin_gradient_formula, pathwidth_upper_bound, peak_gradient_formula, treewidth_exact, winding_peak_pairs,
};
use climb_core::landscapes::{make_counting_boolean_instance, Symbol, SymbolState, WindingLandscape};
use climb_core::reference_rules::{
    default_budget, verify_boolean_lift, verify_cpp_closure, verify_rule_arithmetic, verify_steepest_equals_rules,
};
use climb_core::Execution;

use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cpp,
    Arithmetic,
    Lockstep,
    Lift,
    Gradient,
    Pathwidth,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    /// Single size to check; each suite has its own default range.
    #[arg(long)]
    pub n: Option<usize>,

    /// Step budget for lockstep runs (default 2^(N+4)).
    #[arg(long)]
    pub budget: Option<usize>,
}

pub fn run(args: &VerifyArgs, exec: Execution) -> Result<Report> {
    let sizes = |default: std::ops::RangeInclusive<usize>| -> Vec<usize> {
        args.n.map_or_else(|| default.collect(), |n| vec![n])
    };
    let mut report = Report::new(&format!("{:?}", args.suite).to_lowercase());
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Arithmetic {
        report.extend(arithmetic());
    }
    if all || args.suite == Suite::Cpp {
        for n in sizes(3..=4) {
            report.extend(cpp(n, exec)?);
        }
    }
    if all || args.suite == Suite::Lockstep {
        for n in sizes(2..=10) {
            report.extend(lockstep(n, args.budget.unwrap_or_else(|| default_budget(n)))?);
        }
    }
    if all || args.suite == Suite::Lift {
        for n in sizes(2..=4) {
            report.push(lift(n)?);
        }
    }
    if all || args.suite == Suite::Gradient {
        report.extend(gradients(&sizes(2..=6))?);
        report.push(aggregate_degree(args.n.unwrap_or(8))?);
    }
    if all || args.suite == Suite::Pathwidth {
        report.extend(pathwidth(&sizes(3..=10))?);
    }
    Ok(report)
}

fn arithmetic() -> Report {
    let mut r = Report::new("arithmetic");
    let a = verify_rule_arithmetic();
    for c in &a.chains {
        let at = c.a.map_or(String::new(), |a| format!(" [a={a}]"));
        r.push(Check::new(format!("rule chain {}{at}", c.label), c.holds(), c.values()));
    }
    let failed: Vec<String> = a
        .conflicts
        .iter()
        .filter(|c| !c.holds())
        .map(|c| c.state.to_string())
        .collect();
    r.push(
        Check::new(
            "rule 1a gains 1 and competing rules gain at least 4^(r-1)",
            failed.is_empty(),
            format!("{} conflict states", a.conflicts.len()),
        )
        .with_counterexamples(failed),
    );
    r
}

fn cpp(n: usize, exec: Execution) -> Result<Report> {
    let mut r = Report::new("cpp");
    let c = verify_cpp_closure(n, exec)?;
    r.push(
        Check::new(
            format!("N={n}: improving flips keep admissible states admissible"),
            c.closed_under_improving_flips(),
            format!(
                "{} admissible of {} states, {} escaping flips ({} of them steepest)",
                c.admissible_states,
                c.states,
                c.improving_escapes.len(),
                c.steepest_escapes.len()
            ),
        )
        .with_counterexamples(
            c.improving_escapes
                .iter()
                .map(|e| format!("{} -> {} (+{})", e.from, e.to, e.gain))
                .collect(),
        ),
    );
    r.push(
        Check::new(
            format!("N={n}: improving flips equal rule rewrites along the rule chain from 0^N"),
            c.rules_match_flips_on_reachable(),
            format!(
                "{} states on the chain, {} mismatches, chain stop {:?}",
                c.reachable_states,
                c.reachable_mismatches.len(),
                c.rule_chain_stop
            ),
        )
        .with_counterexamples(
            c.reachable_mismatches
                .iter()
                .map(|m| {
                    let join = |v: &[SymbolState]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ");
                    format!(
                        "{}: flips only [{}], rules only [{}]",
                        m.state,
                        join(&m.improving_only),
                        join(&m.rules_only)
                    )
                })
                .collect(),
        ),
    );
    r.push(
        Check::new(
            format!("N={n}: matching rules improve and stay admissible"),
            c.rule_failures.is_empty(),
            format!("{} failures", c.rule_failures.len()),
        )
        .with_counterexamples(
            c.rule_failures
                .iter()
                .map(|f| format!("{} {} {:?}", f.state, f.application, f.kind))
                .collect(),
        ),
    );
    Ok(r)
}

fn lockstep(n: usize, budget: usize) -> Result<Report> {
    let mut r = Report::new("lockstep");
    let l = verify_steepest_equals_rules(&SymbolState::uniform(n, Symbol::Zero), budget)?;
    let detail = match &l.divergence {
        None => format!("{} steps, both halt", l.steepest_steps),
        Some(d) => format!(
            "agree for {} states; after {} steepest goes to {} and the rules to {}",
            l.agreement,
            d.after,
            d.steepest.as_ref().map_or("<halt>".into(), ToString::to_string),
            d.rules.as_ref().map_or("<halt>".into(), ToString::to_string)
        ),
    };
    r.push(Check::new(
        format!("N={n}: steepest ascent and the rule chain coincide from 0^N"),
        l.sequences_agree(),
        detail,
    ));
    r.push(Check::new(
        format!("N={n}: fail-on-tie steepest ascent never ties"),
        l.tie.is_none(),
        l.tie.clone().unwrap_or_else(|| format!("{} steps, {}", l.steepest_steps, l.steepest_terminal)),
    ));
    r.push(
        Check::new(
            format!("N={n}: improving flips equal rule rewrites on the steepest path"),
            l.neighborhood_mismatches.is_empty(),
            format!("{} mismatching states", l.neighborhood_mismatches.len()),
        )
        .with_counterexamples(l.neighborhood_mismatches.iter().map(|m| m.state.to_string()).collect()),
    );
    Ok(r)
}

fn lift(n: usize) -> Result<Check> {
    let b = verify_boolean_lift(n, default_budget(n))?;
    Ok(Check::new(
        format!("N={n}: Boolean steepest ascent decodes to the symbol trace"),
        b.holds(),
        format!(
            "{} symbol steps, {} Boolean steps, first mismatch {:?}, single-bit steps {}",
            b.symbol_steps, b.boolean_steps, b.first_mismatch, b.single_bit_steps
        ),
    ))
}

fn gradients(sizes: &[usize]) -> Result<Report> {
    let mut r = Report::new("gradient");
    for &n in sizes {
        let w = WindingLandscape::semismooth(n);
        let origin = vec![0; 2 * n];
        let g0 = gradient(&w, &origin)?;
        r.push(Check::new(
            format!("n={n}: origin gradient formula"),
            g0 == origin_gradient_formula(w.schedule()) && g0 == gradient_by_evaluation(&w, &origin)?,
            join(&g0),
        ));
        let mut wrong = Vec::new();
        let mut low = Vec::new();
        for k in 1..=n {
            let peak = WindingLandscape::peak_state(k, n);
            let fd = gradient_by_evaluation(&w, &peak)?;
            for (idx, predicted) in peak_gradient_formula(&w, k).into_iter().enumerate() {
                if let Some(p) = predicted.filter(|p| *p != fd[idx]) {
                    wrong.push(format!("k={k} entry {}: predicted {p}, measured {}", idx + 1, fd[idx]));
                }
            }
            let changed = odd_entries_changed_below(&w, k)?;
            if changed + 1 < k {
                low.push(format!("k={k}: {changed} < {}", k - 1));
            }
        }
        r.push(
            Check::new(
                format!("n={n}: sub-cube peak gradient formula"),
                wrong.is_empty(),
                format!("{} wrong entries", wrong.len()),
            )
            .with_counterexamples(wrong),
        );
        r.push(
            Check::new(
                format!("n={n}: odd gradient entries below level k change at least k-1 times"),
                low.is_empty(),
                format!("{} levels below the bound", low.len()),
            )
            .with_counterexamples(low),
        );
    }
    Ok(r)
}

fn aggregate_degree(n: usize) -> Result<Check> {
    let w = WindingLandscape::semismooth(n);
    let report = degree_bound_report(&w, &winding_peak_pairs(n))?;
    let need = (n - 1) * n / 2;
    let got = report.aggregate();
    Ok(Check::new(
        format!("n={n}: implied total degree at least (n-1)n/2"),
        got.is_some_and(|g| g >= need),
        format!("aggregate {got:?}, bound {need}"),
    ))
}

fn pathwidth(sizes: &[usize]) -> Result<Report> {
    let mut r = Report::new("pathwidth");
    for &n in sizes {
        let g = make_counting_boolean_instance(n)?.constraint_graph();
        let width = pathwidth_upper_bound(&g, &lexicographic_order(g.vertex_count()))?;
        r.push(Check::new(
            format!("N={n}: lexicographic path decomposition of the encoded instance has width 7"),
            width == 7,
            format!("width {width}"),
        ));
        if n == 3 {
            let tw = treewidth_exact(&g)?;
            r.push(Check::new(
                "N=3: exact treewidth of the encoded instance is at most 7",
                tw <= 7,
                format!("treewidth {tw}"),
            ));
        }
    }
    Ok(r)
}

fn join(v: &[climb_core::Fitness]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
