mod common;

use std::collections::HashMap;

use common::small_grid;
use timeline_core::config_ilp::{
    build_config_program, export_lp, extract_timeline, maximize_config, solve_config_exact, ConfigProgram,
};
use timeline_core::generators::gen_random;
use timeline_core::oracle::oracle_solve;
use timeline_core::{verify, ProblemInstance, ProblemKind, TemporalGraph};

#[test]
fn ell_zero_slice_matches_oracle() {
    let mut seen = 0;
    for case in small_grid(900, 61_000).into_iter().filter(|c| c.ell == 0 && c.graph.lifetime() <= 4) {
        seen += 1;
        let g = &case.graph;
        for kind in [ProblemKind::VertexCover, ProblemKind::DominatingSet] {
            let full = ProblemInstance::full(g.clone(), kind, case.k, 0).unwrap();
            let best = oracle_solve(&full).unwrap().optimum;
            let prog = build_config_program(g, case.k, 0, kind).unwrap();
            assert_eq!(maximize_config(&prog).unwrap().value, best, "{case:?} {kind:?}");
            for t in [best.saturating_sub(1), best, best + 1] {
                let inst = ProblemInstance::partial(g.clone(), kind, case.k, 0, t).unwrap();
                let prog = build_config_program(g, case.k, t, kind).unwrap();
                let sol = solve_config_exact(&prog).unwrap();
                assert_eq!(sol.feasible, best >= t, "{case:?} {kind:?} t={t}");
                if sol.feasible {
                    let report = verify(&inst, &sol.witness);
                    assert!(report.satisfies_instance, "{case:?} {:?}", sol.witness);
                    assert_eq!(extract_timeline(&prog, &sol.assignment), sol.witness);
                }
            }
        }
    }
    assert!(seen > 100, "{seen}");
}

#[test]
fn classes_partition_the_snapshots() {
    for seed in 0..200u64 {
        let g = gen_random(1 + (seed % 4) as u32, 1 + (seed / 4 % 6) as u32, 0.3, seed);
        let prog = build_config_program(&g, 1, 0, ProblemKind::DominatingSet).unwrap();
        let total: u32 = prog.classes.iter().map(|c| c.multiplicity()).sum();
        assert_eq!(total, g.lifetime());
    }
}

#[test]
fn extracted_timeline_follows_the_assignment() {
    for case in small_grid(200, 63_000).into_iter().filter(|c| c.graph.lifetime() <= 4) {
        let prog = build_config_program(&case.graph, case.k, 0, ProblemKind::DominatingSet).unwrap();
        let sol = maximize_config(&prog).unwrap();
        let tl = extract_timeline(&prog, &sol.assignment);
        for (c, class) in prog.classes.iter().enumerate() {
            // the multiset of active sets over the class's snapshots
            let mut got: HashMap<usize, u32> = HashMap::new();
            for &i in &class.steps {
                let mask = timeline_core::timeline::active_set(&case.graph, &tl, i)
                    .unwrap()
                    .iter()
                    .fold(0usize, |m, &v| m | 1 << (v - 1));
                *got.entry(mask).or_default() += 1;
            }
            for (mask, &x) in sol.assignment[c].iter().enumerate() {
                assert_eq!(got.get(&mask).copied().unwrap_or(0), x);
            }
        }
        let counts = tl.per_vertex_counts(case.graph.n());
        assert!(counts.iter().all(|&c| c <= case.k));
    }
}

#[test]
fn zero_target_uses_the_empty_set() {
    let g = gen_random(3, 4, 0.5, 1);
    let prog = build_config_program(&g, 1, 0, ProblemKind::DominatingSet).unwrap();
    let sol = solve_config_exact(&prog).unwrap();
    assert!(sol.feasible);
    for (c, class) in prog.classes.iter().enumerate() {
        assert_eq!(sol.assignment[c][0], class.multiplicity());
        assert!(sol.assignment[c][1..].iter().all(|&x| x == 0));
    }
}

#[test]
fn one_class_with_budget_t_needs_a_dominating_subset() {
    let star = TemporalGraph::new(3, vec![vec![(1, 2), (1, 3)]; 3]).unwrap();
    let prog = build_config_program(&star, 3, 9, ProblemKind::DominatingSet).unwrap();
    assert!(solve_config_exact(&prog).unwrap().feasible);
    let matching = TemporalGraph::new(4, vec![vec![(1, 2)]; 2]).unwrap();
    let prog = build_config_program(&matching, 2, 8, ProblemKind::DominatingSet).unwrap();
    // 3 and 4 need themselves every step: 2 + 2 + 2 intervals of budget 2
    assert!(solve_config_exact(&prog).unwrap().feasible);
    let prog = build_config_program(&matching, 1, 8, ProblemKind::DominatingSet).unwrap();
    assert!(!solve_config_exact(&prog).unwrap().feasible);
}

#[test]
fn closed_neighborhood_value() {
    let g = TemporalGraph::new(2, vec![vec![], vec![(1, 2)]]).unwrap();
    let prog = build_config_program(&g, 1, 0, ProblemKind::DominatingSet).unwrap();
    let class = prog.classes.iter().position(|c| !c.edges.is_empty()).unwrap();
    assert_eq!(prog.values[class][0b01], 2);
}

/// Coefficients read back from the LP text: objective, then per row name.
struct ParsedLp {
    objective: HashMap<String, u64>,
    rows: HashMap<String, (HashMap<String, u64>, String, u64)>,
    variables: Vec<String>,
}

fn parse_terms(text: &str) -> HashMap<String, u64> {
    let mut out = HashMap::new();
    let mut coef = 1;
    for tok in text.split_whitespace() {
        if tok == "+" {
            continue;
        }
        match tok.parse::<u64>() {
            Ok(c) => coef = c,
            Err(_) => {
                out.insert(tok.to_string(), coef);
                coef = 1;
            }
        }
    }
    out.retain(|_, &mut c| c != 0);
    out
}

fn parse_lp(text: &str) -> ParsedLp {
    let mut section = "";
    let mut lp = ParsedLp {
        objective: HashMap::new(),
        rows: HashMap::new(),
        variables: Vec::new(),
    };
    for line in text.lines() {
        if line.starts_with('\\') {
            continue;
        }
        if !line.starts_with(' ') {
            section = match line {
                "Maximize" => "obj",
                "Subject To" => "rows",
                "Bounds" => "bounds",
                "General" => "general",
                "End" => "end",
                other => panic!("unknown section {other}"),
            };
            continue;
        }
        let line = line.trim();
        match section {
            "obj" => lp.objective = parse_terms(line.split_once(':').unwrap().1),
            "rows" => {
                let (name, rest) = line.split_once(':').unwrap();
                let op = [">=", "<=", "="].into_iter().find(|op| rest.contains(op)).unwrap();
                let (lhs, rhs) = rest.split_once(op).unwrap();
                lp.rows
                    .insert(name.to_string(), (parse_terms(lhs), op.to_string(), rhs.trim().parse().unwrap()));
            }
            "general" => lp.variables.push(line.to_string()),
            _ => {}
        }
    }
    lp
}

#[test]
fn lp_text_round_trips_the_coefficients() {
    for seed in 0..40u64 {
        let g = gen_random(1 + (seed % 3) as u32, 1 + (seed / 3 % 4) as u32, 0.5, 65_000 + seed);
        let kind = if seed % 2 == 0 { ProblemKind::DominatingSet } else { ProblemKind::VertexCover };
        let prog = build_config_program(&g, 2, 3, kind).unwrap();
        let lp = parse_lp(&export_lp(&prog));
        let subsets = prog.subset_count();
        assert_eq!(lp.variables.len(), prog.classes.len() * subsets);
        let (target, op, rhs) = &lp.rows["target"];
        assert_eq!((op.as_str(), *rhs), (">=", 3));
        for (c, class) in prog.classes.iter().enumerate() {
            for mask in 0..subsets {
                let name = ConfigProgram::variable_name(c, mask);
                let value = prog.values[c][mask];
                assert_eq!(lp.objective.get(&name).copied().unwrap_or(0), value);
                assert_eq!(target.get(&name).copied().unwrap_or(0), value);
                let (row, op, rhs) = &lp.rows[&format!("class_{c}")];
                assert_eq!((row[&name], op.as_str(), *rhs), (1, "=", class.multiplicity() as u64));
                for v in 1..=prog.n {
                    let (row, op, rhs) = &lp.rows[&format!("budget_{v}")];
                    assert_eq!((op.as_str(), *rhs), ("<=", 2));
                    let expect = (mask >> (v - 1) & 1) as u64;
                    assert_eq!(row.get(&name).copied().unwrap_or(0), expect);
                }
            }
        }
    }
}

#[test]
fn two_vertex_program_has_four_variables_per_class() {
    let g = TemporalGraph::new(2, vec![vec![(1, 2)]]).unwrap();
    let prog = build_config_program(&g, 1, 2, ProblemKind::DominatingSet).unwrap();
    let lp = parse_lp(&export_lp(&prog));
    assert_eq!(lp.variables.len(), 4);
    assert_eq!(lp.rows.len(), 1 + 1 + 2);
}

#[test]
fn empty_program_is_header_only() {
    let text = export_lp(&ConfigProgram::default());
    assert!(text.lines().next().unwrap().starts_with('\\'));
    assert_eq!(text.lines().skip(1).collect::<Vec<_>>(), ["Maximize", "Subject To", "Bounds", "General", "End"]);
}
