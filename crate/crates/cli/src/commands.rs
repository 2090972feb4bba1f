use std::fs;
use std::path::Path;

use vmtk_core::corpus;
use vmtk_core::delta::{self, count_delta, enumerate_delta_members, enumerate_rooted_members};
use vmtk_core::io::{from_graph6, read_edge_list, to_graph6};
use vmtk_core::rank::{layout_width, linear_rankwidth_exact, lrw_at_most};
use vmtk_core::split::{self, BagKind, MarkedGraph};
use vmtk_core::vm::locally_equivalent_small;
use vmtk_core::{bits, Graph, Report};

use crate::{Cli, Command, DeltaCommand, Format, Status};

type Outcome = Result<Status, String>;

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Lrw {
            input,
            format,
            decide,
            budget,
        } => lrw(&load(input, *format)?, *decide, *budget),
        Command::Verify { target, k } => verify(target, *k, cli.seed),
        Command::Delta { sub } => match sub {
            DeltaCommand::Enumerate { k, rooted } => enumerate(*k, *rooted),
            DeltaCommand::Count { k } => count(*k),
            DeltaCommand::Recognize { input, format } => recognize(&load(input, *format)?),
        },
        Command::Splitdec {
            input,
            format,
            canonical,
            emit_dot,
            per_component,
        } => splitdec(&load(input, *format)?, *canonical, emit_dot.as_deref(), *per_component),
    }
}

fn load(path: &Path, format: Option<Format>) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::G6,
        _ => Format::Edgelist,
    });
    let parsed = match format {
        Format::Edgelist => read_edge_list(&text),
        Format::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .ok_or("no graph6 line")?;
            from_graph6(line)
        }
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn lrw(g: &Graph, decide: Option<usize>, budget: u64) -> Outcome {
    match decide {
        None => {
            let (w, layout) = linear_rankwidth_exact(g).map_err(|e| format!("{e}; use --decide for larger graphs"))?;
            println!("lrw = {w}");
            println!("{}", layout.labels(g).join(" "));
            Ok(Status::Pass)
        }
        Some(t) => match lrw_at_most(g, t, budget).map_err(|e| e.to_string())? {
            Some(layout) => {
                println!("lrw <= {t}: yes");
                println!("width = {}", layout_width(g, &layout).map_err(|e| e.to_string())?);
                println!("{}", layout.labels(g).join(" "));
                Ok(Status::Pass)
            }
            None => {
                println!("lrw <= {t}: no");
                Ok(Status::Fail)
            }
        },
    }
}

fn parse_target(target: &str, k: Option<usize>) -> Result<(String, Option<usize>), String> {
    match target.rsplit_once('-') {
        Some((name, level)) if level.chars().all(|c| c.is_ascii_digit()) && !level.is_empty() => {
            let level: usize = level.parse().map_err(|_| format!("bad level in {target:?}"))?;
            if k.is_some_and(|k| k != level) {
                return Err(format!("--k {} contradicts target {target:?}", k.unwrap()));
            }
            Ok((name.to_string(), Some(level)))
        }
        _ => Ok((target.to_string(), k)),
    }
}

fn need_level(name: &str, k: Option<usize>, range: std::ops::RangeInclusive<usize>) -> Result<usize, String> {
    let k = k.ok_or_else(|| format!("target {name} needs a level, e.g. {name}-{}", range.end()))?;
    if range.contains(&k) {
        Ok(k)
    } else {
        Err(format!("target {name} supports levels {}..={}, got {k}", range.start(), range.end()))
    }
}

fn verify(target: &str, k: Option<usize>, seed: u64) -> Outcome {
    let (name, k) = parse_target(target, k)?;
    let mut report = Report::new();
    let err = |e: vmtk_core::Error| e.to_string();
    match name.as_str() {
        "o1" => {
            for (label, g) in delta::o1_graphs() {
                report.extend(&format!("{label}."), delta::verify_obstruction(&g, 1).map_err(err)?);
            }
        }
        "excluded" => {
            let k = need_level(&name, k, 0..=2)?;
            for (i, m) in enumerate_delta_members(k).map_err(err)?.iter().enumerate() {
                report.extend(&format!("member{i}."), delta::verify_excluded(&m.graph, k).map_err(err)?);
            }
        }
        "composition" => {
            let k = need_level(&name, k, 1..=2)?;
            report = delta::verify_composition_lemmas(k).map_err(err)?;
        }
        "canonical" => {
            let k = need_level(&name, k, 1..=2)?;
            for (i, m) in enumerate_delta_members(k).map_err(err)?.iter().enumerate() {
                let d = split::build_appendix_decomposition(&m.graph, &m.cert).map_err(err)?;
                let c = split::canonical_decomposition(&m.graph).map_err(err)?;
                let s = split::canonical_decomposition_seeded(&m.graph, seed.wrapping_add(i as u64)).map_err(err)?;
                report.holds(format!("member{i}.appendix_is_canonical"), d.isomorphic_fixing_labels(&c));
                report.holds(format!("member{i}.seeded_run_agrees"), s.isomorphic_fixing_labels(&c));
                let linked = (0..m.graph.n())
                    .all(|x| (0..m.graph.n()).all(|y| x == y || c.linked(x, y) == Ok(m.graph.has_edge(x, y))));
                report.holds(format!("member{i}.linked_iff_edge"), linked);
            }
        }
        "treelocal" => {
            for n in 1..=7 {
                let trees = corpus::trees(n);
                let mut equivalent = 0;
                for i in 0..trees.len() {
                    for j in i + 1..trees.len() {
                        if locally_equivalent_small(&trees[i], &trees[j]).map_err(err)? {
                            equivalent += 1;
                        }
                    }
                }
                report.equal(format!("trees{n}.equivalent_nonisomorphic_pairs"), 0, equivalent);
            }
        }
        "orbits" => {
            let k = need_level(&name, k, 0..=2)?;
            for (i, m) in enumerate_delta_members(k).map_err(err)?.iter().enumerate() {
                report.extend(&format!("member{i}."), delta::orbit_lower_bound_check(&m.graph, &m.cert).map_err(err)?);
            }
            if k == 2 {
                for level in 2..=3 {
                    let t = count_delta(level).map_err(err)?;
                    let bound = (1u128 << (level - 1)) * t.a * t.a * (t.a + 1);
                    report.at_least(format!("recurrence.p{level}"), bound, t.p.unwrap_or(0));
                }
            }
        }
        other => return Err(format!("unknown target {other:?}")),
    }
    report.sort();
    println!("# vmtk verify {target}");
    println!("# seed {seed}");
    print!("{report}");
    let passed = report.checks.iter().filter(|c| c.pass).count();
    println!("# {passed}/{} checks passed", report.checks.len());
    Ok(if report.passed() { Status::Pass } else { Status::Fail })
}

fn enumerate(k: usize, rooted: bool) -> Outcome {
    if rooted {
        for r in enumerate_rooted_members(k).map_err(|e| e.to_string())? {
            println!("# code {} root {}", delta::rooted_code(&r.member.cert, r.root), r.root);
            println!("{}", to_graph6(&r.member.graph));
        }
    } else {
        for m in enumerate_delta_members(k).map_err(|e| e.to_string())? {
            println!("# code {}", delta::member_code(&m.cert));
            println!("{}", to_graph6(&m.graph));
        }
    }
    Ok(Status::Pass)
}

fn count(k: usize) -> Outcome {
    let table = count_delta(k).map_err(|e| e.to_string())?;
    print!("{table}");
    Ok(Status::Pass)
}

fn recognize(g: &Graph) -> Outcome {
    let Some(cert) = delta::recognize_delta(g) else {
        println!("not a member");
        return Ok(Status::Fail);
    };
    let name = |v: usize| g.label(v).to_string();
    println!("member of level {}", cert.k);
    if let Some(t) = cert.main_triangle() {
        println!("main triangle: {}", t.map(name).join(" "));
    }
    let thick: Vec<String> = cert.thick_edges().into_iter().map(|(u, v)| format!("{}-{}", name(u), name(v))).collect();
    println!("thick edges: {}", thick.join(" "));
    for t in cert.triangles() {
        println!("triangle: {}", t.map(name).join(" "));
    }
    if cert.k >= 1 {
        let ty = delta::classify_type(g, &cert).map_err(|e| e.to_string())?;
        println!("type: {:?} (symmetry order {})", ty.tag, ty.symmetry_order);
    }
    Ok(Status::Pass)
}

fn decompose(g: &Graph, canonical: bool) -> Result<MarkedGraph, String> {
    if canonical {
        return split::canonical_decomposition(g).map_err(|e| e.to_string());
    }
    match split::find_split(g).map_err(|e| e.to_string())? {
        Some(s) => split::simple_decomposition(g, &s).map_err(|e| e.to_string()),
        None => Ok(MarkedGraph::from_graph(g)),
    }
}

fn splitdec(g: &Graph, canonical: bool, dot: Option<&Path>, per_component: bool) -> Outcome {
    let parts: Vec<Graph> = if per_component {
        g.components().into_iter().map(|c| g.induced(c)).collect()
    } else {
        vec![g.clone()]
    };
    let mut dots = String::new();
    for (i, part) in parts.iter().enumerate() {
        let d = decompose(part, canonical)?;
        if per_component {
            println!("# component {i}");
        }
        for (bag, kind) in d.classify_bags().unwrap_or_default() {
            let kind = match kind {
                BagKind::Prime => "prime".to_string(),
                BagKind::Complete => "complete".to_string(),
                BagKind::Star(c) => format!("star center {}", d.graph.label(c)),
            };
            let members: Vec<&str> = bits::iter(bag).map(|v| d.graph.label(v)).collect();
            println!("# bag {kind}: {}", members.join(" "));
        }
        print!("{}", d.to_text());
        dots.push_str(&d.to_dot());
    }
    if let Some(path) = dot {
        fs::write(path, dots).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(Status::Pass)
}
