use std::fmt::Write;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use sigma_posets::complex::{order_complex_with_cap, reduced_betti};
use sigma_posets::el::{
    decreasing_maximal_chains, label_poset, monotone_chains, verify_el, Monotone, VerifyOptions,
};
use sigma_posets::formulas::{
    decreasing_count, decreasing_count_by_block_counts, table_closed_form, table_computed,
    ClosedForm, TableCase, TableRow, Variant,
};
use sigma_posets::partition::{build_type_poset_capped, PosetType, SignSet};
use sigma_posets::trees::{
    count_blooming, count_flourishing, count_increasing, enumerate_blooming, enumerate_flourishing,
    enumerate_increasing_trees, flourishing_closed_form,
};
use sigma_posets::{Error, Integer, PartitionPoset, Rational};

use super::{Command, Failure, Format, Method, Outcome, PosetArgs, TreeFamily};

type Run = Result<Outcome, Failure>;

pub(crate) fn run(command: Command, out: &mut String) -> Run {
    match command {
        Command::Build { poset, format } => build(&poset, format, out),
        Command::VerifyEl {
            poset,
            max_intervals,
            time_limit,
        } => verify(&poset, max_intervals, time_limit, out),
        Command::CountDecreasing {
            poset,
            all_orders,
            sample_orders,
            seed,
            list,
        } => count(&poset, all_orders, sample_orders, seed, list, out),
        Command::Formula {
            n,
            m,
            variant,
            method,
            check,
            max_elements,
        } => formula(n, m, variant, method, check, max_elements, out),
        Command::Table {
            case,
            rows,
            n,
            format,
            enumerate_max_n,
            max_elements,
        } => table(case, &rows, n, format, enumerate_max_n, max_elements, out),
        Command::Trees {
            family,
            n,
            param,
            enumerate_max_n,
            list,
        } => trees(family, n, param, enumerate_max_n, list, out),
        Command::Betti { poset, face_cap } => betti(&poset, face_cap, out),
        Command::Charpoly { poset, format } => charpoly(&poset, format, out),
    }
}

fn unsupported(format: Format) -> Failure {
    Failure::Usage(format!(
        "format {format:?} is not supported by this command"
    ))
}

fn load(args: &PosetArgs) -> Result<(PartitionPoset, SignSet), Failure> {
    let signs = args.signs()?;
    let poset = build_type_poset_capped(args.n, &signs, args.kind, args.max_elements)?;
    Ok((poset, signs))
}

fn top_of(poset: &PartitionPoset) -> Result<usize, Failure> {
    Ok(poset.require_top()?)
}

fn build(args: &PosetArgs, format: Format, out: &mut String) -> Run {
    let (poset, _) = load(args)?;
    match format {
        Format::Json => writeln!(out, "{}", poset.to_json()).unwrap(),
        Format::Dot => out.push_str(&poset.to_dot()),
        other => return Err(unsupported(other)),
    }
    Ok(Outcome::Agree)
}

fn verify(
    args: &PosetArgs,
    max_intervals: Option<u64>,
    time_limit: Option<f64>,
    out: &mut String,
) -> Run {
    if max_intervals == Some(0) {
        return Err(Failure::Usage("--max-intervals must be positive".into()));
    }
    let deadline = match time_limit {
        Some(t) if !(t > 0.0 && t.is_finite()) => {
            return Err(Failure::Usage(
                "--time-limit must be a positive number".into(),
            ))
        }
        Some(t) => Some(Instant::now() + Duration::from_secs_f64(t)),
        None => None,
    };
    let (poset, signs) = load(args)?;
    let labels = label_poset(&poset, &signs)?;
    let cert = verify_el(
        &poset,
        &labels,
        &VerifyOptions {
            max_intervals,
            deadline,
        },
    )?;
    let witness = cert.failure.map(|f| {
        json!({
            "bottom": poset.element(f.bottom).to_string(),
            "top": poset.element(f.top).to_string(),
            "reason": f.reason,
        })
    });
    let body = json!({
        "n": args.n,
        "m": args.m,
        "type": args.kind.to_string(),
        "distinguished": signs.distinguished(),
        "sign_order": signs.order(),
        "elements": poset.len(),
        "covers": poset.cover_count(),
        "verdict": cert.verdict,
        "witness": witness,
        "intervals_checked": cert.intervals_checked,
        "chains_examined": cert.chains_examined,
        "truncated": cert.truncated,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&body).unwrap()).unwrap();
    Ok(if cert.passed() {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

fn decreasing_under(poset: &PartitionPoset, signs: &SignSet) -> Result<Integer, Failure> {
    let labels = label_poset(poset, signs)?;
    let top = top_of(poset)?;
    Ok(decreasing_maximal_chains(
        poset,
        &labels,
        poset.bottom(),
        top,
    )?)
}

fn count(
    args: &PosetArgs,
    all_orders: bool,
    sample_orders: Option<usize>,
    seed: u64,
    list: bool,
    out: &mut String,
) -> Run {
    let (poset, signs) = load(args)?;
    let orders: Vec<Vec<usize>> = if all_orders {
        (0..args.m).permutations(args.m).collect()
    } else if let Some(k) = sample_orders {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k)
            .map(|_| {
                let mut order: Vec<usize> = (0..args.m).collect();
                order.shuffle(&mut rng);
                order
            })
            .collect()
    } else {
        Vec::new()
    };

    if orders.is_empty() {
        if list {
            let labels = label_poset(&poset, &signs)?;
            let top = top_of(&poset)?;
            for chain in
                monotone_chains(&poset, &labels, poset.bottom(), top, Monotone::Decreasing)?
            {
                let nodes = chain
                    .nodes()
                    .iter()
                    .map(|&i| poset.element(i).to_string())
                    .join(" < ");
                let word = labels.word(&poset, &chain)?.iter().join(" ");
                writeln!(out, "{nodes}\t{word}").unwrap();
            }
        } else {
            writeln!(out, "{}", decreasing_under(&poset, &signs)?).unwrap();
        }
        return Ok(Outcome::Agree);
    }

    writeln!(out, "order,count").unwrap();
    let mut counts = Vec::with_capacity(orders.len());
    for order in &orders {
        let mut reordered = SignSet::new(args.m)?.with_order(order)?;
        reordered = reordered.with_distinguished(signs.distinguished())?;
        let c = decreasing_under(&poset, &reordered)?;
        writeln!(out, "{},{c}", order.iter().join("<")).unwrap();
        counts.push(c);
    }
    Ok(if counts.iter().all_equal() {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

/// The poset whose chains the variant counts, with its number of signs.
fn poset_for(variant: Variant, m: usize) -> (PosetType, usize) {
    match variant {
        Variant::LinearBC => (PosetType::C, 1),
        Variant::LinearD => (PosetType::D, 1),
        Variant::B => (PosetType::B, m),
        Variant::C => (PosetType::C, m),
        Variant::D => (PosetType::D, m),
    }
}

/// Decreasing chains from bottom to top of the type poset. Parameters with
/// no such poset (type D, one sign, n = 1) have no chains.
fn enumerate_count(n: usize, kind: PosetType, m: usize, cap: usize) -> Result<Integer, Failure> {
    let signs = SignSet::new(m)?;
    match build_type_poset_capped(n, &signs, kind, cap) {
        Ok(poset) => decreasing_under(&poset, &signs),
        Err(Error::InvalidParameters(_)) => Ok(Integer::from(0)),
        Err(e) => Err(e.into()),
    }
}

fn formula(
    n: usize,
    m: usize,
    variant: Variant,
    method: Method,
    check: bool,
    max_elements: usize,
    out: &mut String,
) -> Run {
    let m = if variant.is_linear() { 1 } else { m };
    let value = match method {
        Method::Shapes => decreasing_count(n, variant, m)?,
        Method::BlockCounts => decreasing_count_by_block_counts(n, variant, m)?,
    };
    if !check {
        writeln!(out, "{value}").unwrap();
        return Ok(Outcome::Agree);
    }
    let (kind, signs) = poset_for(variant, m);
    let enumerated = enumerate_count(n, kind, signs, max_elements)?;
    let agree = enumerated == value;
    writeln!(out, "n,m,variant,formula,enumerated,agrees").unwrap();
    writeln!(
        out,
        "{n},{m},{variant},{value},{enumerated},{}",
        yes_no(agree)
    )
    .unwrap();
    Ok(if agree {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct TableLine {
    row: TableRow,
    n: usize,
    closed: ClosedForm,
    computed: Integer,
    enumerated: Option<Integer>,
}

impl TableLine {
    fn agrees(&self) -> &'static str {
        match &self.closed {
            ClosedForm::Value(v) => yes_no(*v == self.computed),
            ClosedForm::Unavailable => "n/a",
            ClosedForm::Undefined(_) => "undefined",
        }
    }

    fn enumeration_agrees(&self) -> &'static str {
        match &self.enumerated {
            Some(e) => yes_no(*e == self.computed),
            None => "n/a",
        }
    }
}

fn table(
    case: TableCase,
    rows: &[TableRow],
    ns: std::ops::RangeInclusive<usize>,
    format: Format,
    enumerate_max_n: usize,
    max_elements: usize,
    out: &mut String,
) -> Run {
    if *ns.start() == 0 {
        return Err(Failure::Usage("n starts at 1".into()));
    }
    let mut lines = Vec::new();
    for &row in rows {
        for n in ns.clone() {
            let computed = table_computed(row, case, n)?;
            let enumerated = if n <= enumerate_max_n {
                Some(match row {
                    // The type-A poset on n + 1 points.
                    TableRow::A => enumerate_count(n + 1, PosetType::A, 1, max_elements)?,
                    TableRow::B => enumerate_count(n, PosetType::B, case.signs(), max_elements)?,
                    TableRow::C => enumerate_count(n, PosetType::C, case.signs(), max_elements)?,
                    TableRow::D => enumerate_count(n, PosetType::D, case.signs(), max_elements)?,
                })
            } else {
                None
            };
            lines.push(TableLine {
                row,
                n,
                closed: table_closed_form(row, case, n),
                computed,
                enumerated,
            });
        }
    }
    let header = [
        "row",
        "case",
        "n",
        "closed_form",
        "computed",
        "agrees",
        "enumerated",
        "enumeration_agrees",
    ];
    let cells = |l: &TableLine| -> Vec<String> {
        vec![
            l.row.to_string(),
            case.to_string(),
            l.n.to_string(),
            l.closed.to_string(),
            l.computed.to_string(),
            l.agrees().to_string(),
            l.enumerated
                .as_ref()
                .map_or(String::new(), |e| e.to_string()),
            l.enumeration_agrees().to_string(),
        ]
    };
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(",")).unwrap();
            for l in &lines {
                writeln!(out, "{}", cells(l).join(",")).unwrap();
            }
        }
        Format::Markdown => {
            writeln!(out, "| {} |", header.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(header.len())).unwrap();
            for l in &lines {
                writeln!(out, "| {} |", cells(l).join(" | ")).unwrap();
            }
        }
        other => return Err(unsupported(other)),
    }
    let disagree = lines
        .iter()
        .any(|l| l.agrees() == "no" || l.enumeration_agrees() == "no");
    Ok(if disagree {
        Outcome::Disagree
    } else {
        Outcome::Agree
    })
}

fn trees(
    family: TreeFamily,
    ns: std::ops::RangeInclusive<usize>,
    params: std::ops::RangeInclusive<usize>,
    enumerate_max_n: usize,
    list: bool,
    out: &mut String,
) -> Run {
    let params: Vec<usize> = match family {
        TreeFamily::Increasing => vec![0],
        _ => params.collect(),
    };
    if list {
        for n in ns {
            for &p in &params {
                let stream: Box<dyn Iterator<Item = _>> = match family {
                    TreeFamily::Increasing => Box::new(enumerate_increasing_trees(n)),
                    TreeFamily::Flourishing => Box::new(enumerate_flourishing(n, p)),
                    TreeFamily::Blooming => Box::new(enumerate_blooming(n, p)),
                };
                for t in stream {
                    writeln!(out, "{n},{p},{t}").unwrap();
                }
            }
        }
        return Ok(Outcome::Agree);
    }

    let mut agree = true;
    match family {
        TreeFamily::Increasing => writeln!(out, "n,count,enumerated").unwrap(),
        TreeFamily::Flourishing => writeln!(out, "n,r,count,closed_form,enumerated").unwrap(),
        TreeFamily::Blooming => writeln!(out, "n,q,count,enumerated").unwrap(),
    }
    for n in ns {
        for &p in &params {
            let enumerate = n <= enumerate_max_n;
            let (count, extra, enumerated) = match family {
                TreeFamily::Increasing => (
                    count_increasing(n),
                    None,
                    enumerate.then(|| enumerate_increasing_trees(n).count()),
                ),
                TreeFamily::Flourishing => (
                    count_flourishing(n, p),
                    Some(flourishing_closed_form(n, p)),
                    enumerate.then(|| enumerate_flourishing(n, p).count()),
                ),
                TreeFamily::Blooming => (
                    count_blooming(n, p),
                    None,
                    enumerate.then(|| enumerate_blooming(n, p).count()),
                ),
            };
            if let Some(e) = enumerated {
                agree &= Integer::from(e) == count;
            }
            if let Some(c) = &extra {
                agree &= *c == count;
            }
            let enumerated = enumerated.map_or(String::new(), |e| e.to_string());
            match (family, extra) {
                (TreeFamily::Increasing, _) => writeln!(out, "{n},{count},{enumerated}"),
                (_, Some(c)) => writeln!(out, "{n},{p},{count},{c},{enumerated}"),
                (_, None) => writeln!(out, "{n},{p},{count},{enumerated}"),
            }
            .unwrap();
        }
    }
    Ok(if agree {
        Outcome::Agree
    } else {
        Outcome::Disagree
    })
}

fn betti(args: &PosetArgs, face_cap: usize, out: &mut String) -> Run {
    let (poset, _) = load(args)?;
    let complex = order_complex_with_cap(&poset, face_cap)?;
    let betti = reduced_betti::<Rational>(&complex);
    let body = betti
        .iter()
        .map(|(d, b)| format!("\"{d}\": {b}"))
        .join(", ");
    writeln!(out, "{{{body}}}").unwrap();
    Ok(Outcome::Agree)
}

fn charpoly(args: &PosetArgs, format: Format, out: &mut String) -> Run {
    let (poset, _) = load(args)?;
    let chi = poset.characteristic_polynomial::<Integer>();
    match format {
        Format::Text => writeln!(out, "{chi}").unwrap(),
        Format::Json => {
            let body = json!({
                "polynomial": chi.to_string(),
                "rank": poset.poset_rank(),
                "spheres": chi.coefficient(0).abs().to_string(),
            });
            writeln!(out, "{body}").unwrap();
        }
        other => return Err(unsupported(other)),
    }
    Ok(Outcome::Agree)
}
