use crate::{AnalyzeKind, CertifyKind, Command, Outcome, EXIT_FAIL, EXIT_PASS};
use cgl_core::analysis::{
    abelian_diameter_lower_bound, bfs_diameter, cheeger_buser_check, cheeger_exact,
    cheeger_spec_interval_check, closed_walk_counts, compute_gs_sigma, counting_report,
    diameter_relation_check, fingerprint, CheegerMode,
};
use cgl_core::constructions::perm_apparatus;
use cgl_core::graph::{klein_groups, Variant, VariantGraph};
use cgl_core::io::{
    graph_to_json, parse_instance, parse_sigma, read_graph, resolve_family, spectrum_to_csv,
    AnalysisReport, CertificateReport, GroupInstance, Payload, RunConfig,
};
use cgl_core::spectral::{
    certify_ramanujan, dichotomy, eigensystem, gabber_galil_h_isospectral, pairing_certificate,
    twisted_h_isospectral, uniformity_report,
};
use cgl_core::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::Path;

/// A JSON file path when one exists, otherwise a family string.
pub fn load_graph(arg: &str) -> Result<VariantGraph> {
    let p = Path::new(arg);
    if p.is_file() {
        read_graph(p)
    } else {
        resolve_family(arg)
    }
}

pub fn execute(cmd: Command, cfg: &RunConfig) -> Outcome {
    let result = match cmd {
        Command::Build { family } => resolve_family(&family).map(|g| Outcome {
            output: Some(graph_to_json(&g)),
            extension: "json",
            ..Default::default()
        }),
        Command::Spectrum { graph } => spectrum(&graph, cfg),
        Command::Certify(kind) => certify(kind, cfg),
        Command::Analyze(kind) => analyze(kind, cfg),
        Command::Sweep { .. } => Err(Error::InvalidParameter("sweeps cannot be nested".into())),
    };
    result.unwrap_or_else(|e| Outcome::from_error(&e))
}

fn spectrum(arg: &str, cfg: &RunConfig) -> Result<Outcome> {
    let g = load_graph(arg)?;
    let es = eigensystem::<f64>(g.adjacency(), cfg.eigen_options())?;
    Ok(Outcome {
        output: Some(spectrum_to_csv(&es.spectrum)),
        message: Some(format!(
            "trace check: eigenvalue sum {:.9} against trace {}",
            es.spectrum.sum(),
            es.trace
        )),
        extension: "csv",
        ..Default::default()
    })
}

fn json_outcome(text: String, pass: bool) -> Outcome {
    Outcome {
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
        output: Some(text),
        extension: "json",
        ..Default::default()
    }
}

fn certificate(cfg: &RunConfig, payloads: Vec<Payload>) -> Outcome {
    let report = CertificateReport::new(cfg, payloads);
    json_outcome(report.to_json(), report.pass)
}

fn instance_sigmas(
    inst: &GroupInstance,
    sigmas: &[String],
) -> Result<Vec<cgl_core::algebra::GroupMap>> {
    sigmas.iter().map(|s| parse_sigma(&inst.group, s)).collect()
}

fn certify(kind: CertifyKind, cfg: &RunConfig) -> Result<Outcome> {
    let tol = cfg.tol;
    let payloads = match kind {
        CertifyKind::Ramanujan { graphs } => graphs
            .iter()
            .map(|arg| {
                let g = load_graph(arg)?;
                let c = certify_ramanujan(&g, cfg.eigen_options())?;
                Payload::new("ramanujan", vec![g.family().to_string()], c.pass, &c)
            })
            .collect::<Result<Vec<_>>>()?,
        CertifyKind::Pairing { instance, i, j } => {
            let inst = parse_instance(&instance)?;
            let sigma = inst
                .sigma
                .as_ref()
                .ok_or_else(|| Error::Parse("pairing needs <group>/<set>/<sigma>".into()))?;
            let c = pairing_certificate(&inst.group, &inst.set, sigma, i, j, tol)?;
            vec![Payload::new("pairing", vec![instance], c.pass, &c)?]
        }
        CertifyKind::HIsospectral {
            gg,
            klein,
            instance,
            sigmas,
            perm,
        } => {
            let (label, v) = match (gg, perm, instance) {
                (Some(n), None, None) => {
                    let name = klein.ok_or_else(|| Error::Parse("--gg needs --klein".into()))?;
                    let k = klein_groups()
                        .into_iter()
                        .find(|k| k.name == name)
                        .ok_or_else(|| Error::Parse(format!("unknown Klein group '{name}'")))?;
                    (
                        format!("gg:n={n},klein={name}"),
                        gabber_galil_h_isospectral(n, &k, tol)?,
                    )
                }
                (None, Some(kn), None) => {
                    let (k, n) = kn
                        .split_once(',')
                        .and_then(|(k, n)| Some((k.trim().parse().ok()?, n.trim().parse().ok()?)))
                        .ok_or_else(|| Error::Parse(format!("--perm expects k,n, got '{kn}'")))?;
                    let app = perm_apparatus(k, n)?;
                    let (group, set) = app.group_and_set()?;
                    let maps = app.generator_maps(&group)?;
                    (
                        format!("perm:k={k},n={n}"),
                        twisted_h_isospectral(&group, &set, &maps, tol)?,
                    )
                }
                (None, None, Some(spec)) => {
                    let inst = parse_instance(&spec)?;
                    let maps = instance_sigmas(&inst, &sigmas)?;
                    (
                        spec,
                        twisted_h_isospectral(&inst.group, &inst.set, &maps, tol)?,
                    )
                }
                _ => {
                    return Err(Error::Parse(
                        "give exactly one of --gg, --perm or --instance".into(),
                    ))
                }
            };
            vec![Payload::new("h-isospectral", vec![label], v.pass, &v)?]
        }
        CertifyKind::Dichotomy { instance, sigmas } => {
            let inst = parse_instance(&instance)?;
            let maps = instance_sigmas(&inst, &sigmas)?;
            let r = dichotomy(&inst.group, &inst.set, &maps, cfg.eigen_options())?;
            vec![Payload::new("dichotomy", vec![instance], r.pass, &r)?]
        }
    };
    Ok(certificate(cfg, payloads))
}

fn analysis(
    kind: &str,
    inputs: Vec<String>,
    numbers: Value,
    witnesses: Value,
    pass: bool,
) -> Outcome {
    let r = AnalysisReport {
        analysis: kind.into(),
        inputs,
        numbers,
        witnesses,
        pass,
    };
    json_outcome(r.to_json(), pass)
}

fn parse_degrees(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::Parse(format!("cannot read degrees from '{s}'"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| bad()))
        .collect()
}

fn analyze(kind: AnalyzeKind, cfg: &RunConfig) -> Result<Outcome> {
    let opts = cfg.eigen_options();
    Ok(match kind {
        AnalyzeKind::Diameter {
            graphs,
            abelian_bound,
        } => {
            let gs = graphs
                .iter()
                .map(|g| load_graph(g))
                .collect::<Result<Vec<_>>>()?;
            let diameters: Vec<Value> = gs
                .iter()
                .map(|g| json!(bfs_diameter(g.adjacency())))
                .collect();
            let mut numbers = json!({ "diameters": diameters });
            let mut pass = true;
            if let [x, y] = gs.as_slice() {
                let r = diameter_relation_check(x, y)?;
                pass &= r.pass;
                numbers["relation"] = json!(r);
            }
            if abelian_bound {
                let mut bounds = Vec::new();
                for (arg, g) in graphs.iter().zip(&gs) {
                    let rest = g.family().split_once('/').map(|(_, r)| r).ok_or_else(|| {
                        Error::Parse(format!("{arg} is not a group-built family"))
                    })?;
                    let inst = parse_instance(rest)?;
                    let b = abelian_diameter_lower_bound(&inst.group, &inst.set, g)?;
                    pass &= b.pass;
                    bounds.push(json!(b));
                }
                numbers["abelian_bounds"] = json!(bounds);
            }
            analysis("diameter", graphs, numbers, json!(null), pass)
        }
        AnalyzeKind::Cheeger { graph, mode } => {
            let g = load_graph(&graph)?;
            let mode = CheegerMode::parse(&mode)?;
            let c = cheeger_exact(g.adjacency(), mode)?;
            let buser = cheeger_buser_check(g.adjacency(), opts)?;
            let mut pass = buser.pass;
            let mut numbers = json!({ "constant": c, "cheeger_buser": buser });
            if g.variant() != Variant::Schreier {
                let eps = match mode {
                    CheegerMode::Vertex => c.value,
                    CheegerMode::Edge => cheeger_exact(g.adjacency(), CheegerMode::Vertex)?.value,
                };
                let iv = cheeger_spec_interval_check(&g, eps, opts)?;
                pass &= iv.pass;
                numbers["interval"] = json!(iv);
            }
            analysis(
                "cheeger",
                vec![graph],
                numbers,
                json!({ "subset": c.subset }),
                pass,
            )
        }
        AnalyzeKind::Loops { graph } => {
            let g = load_graph(&graph)?;
            let a = g.adjacency();
            let loops: Vec<usize> = (0..a.n()).filter(|&x| a.get(x, x) > 0).collect();
            let numbers = json!({ "loop_count": a.trace(), "loop_vertices": loops.len() });
            analysis(
                "loops",
                vec![graph],
                numbers,
                json!({ "vertices": loops }),
                true,
            )
        }
        AnalyzeKind::Walks {
            graph,
            length,
            counting,
        } => {
            let g = load_graph(&graph)?;
            let counts = closed_walk_counts(g.adjacency(), length)?;
            let mut hist: BTreeMap<u64, usize> = BTreeMap::new();
            for &c in &counts {
                *hist.entry(c).or_default() += 1;
            }
            let hist: Vec<(u64, usize)> = hist.into_iter().collect();
            let mut numbers = json!({
                "length": length,
                "vertices": counts.iter().filter(|&&c| c > 0).count(),
                "histogram": hist,
            });
            let mut pass = true;
            if let Some(nr) = counting {
                if length != 3 {
                    return Err(Error::InvalidParameter(
                        "counting bounds use closed 3-walks".into(),
                    ));
                }
                let (n, r) = nr
                    .split_once(',')
                    .and_then(|(n, r)| Some((n.trim().parse().ok()?, r.trim().parse().ok()?)))
                    .ok_or_else(|| Error::Parse(format!("--counting expects n,r, got '{nr}'")))?;
                let rep = counting_report(g.family(), g.adjacency(), n, r)?;
                pass = rep.pass;
                numbers["counting"] = json!(rep);
            }
            analysis("walks", vec![graph], numbers, json!(null), pass)
        }
        AnalyzeKind::Fingerprint { graphs } => {
            let fps = graphs
                .iter()
                .map(|g| fingerprint(load_graph(g)?.adjacency(), opts))
                .collect::<Result<Vec<_>>>()?;
            let mut numbers = json!({ "fingerprints": fps });
            if let [x, y] = fps.as_slice() {
                numbers["distinct"] = json!(x != y);
            }
            analysis("fingerprint", graphs, numbers, json!(null), true)
        }
        AnalyzeKind::Gssigma { instance } => {
            let inst = parse_instance(&instance)?;
            let sigma = inst
                .sigma
                .as_ref()
                .ok_or_else(|| Error::Parse("gssigma needs <group>/<set>/<sigma>".into()))?;
            let r = compute_gs_sigma(&inst.group, &inst.set, sigma)?;
            let witnesses = json!({ "subgroup": r.subgroup });
            let pass = r.pass;
            analysis("gssigma", vec![instance], json!(r), witnesses, pass)
        }
        AnalyzeKind::Uniformity { k, n, alternating } => {
            let rows = uniformity_report(k, parse_degrees(&n)?, alternating)?;
            let pass = rows.windows(2).all(|w| w[0].m_ratio < w[1].m_ratio);
            let label = format!("{}:k={k},n={n}", if alternating { "alt" } else { "sym" });
            analysis(
                "uniformity",
                vec![label],
                json!({ "rows": rows }),
                json!(null),
                pass,
            )
        }
    })
}
