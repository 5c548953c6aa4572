//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeSet;
use std::path::Path;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rookring::local::{
    builtin_statistic, decompose, junta_basis, minimal_locality, BuiltinStatistic, Decomposed, PermutationStatistic,
};
use rookring::rep::{
    alpha, check_equivariant_conjecture, check_novak_rhoades, expected_graded_character, graded_character_on,
    partitions, CharacterTable, ConjectureReport, Partition, Verdict,
};
use rookring::ring::{
    hilbert_series, ideal_generators, ideal_membership, injection_sum_a, injection_sum_b, marching_rewrite,
    parse_polynomial, polynomial_from_json, polynomial_to_json, standard_monomial_basis, GridMonomial, JsonTerm,
    MarchingAxis, Polynomial, Reducer,
};
use rookring::schensted::{
    all_permutations, ballot_check, factorial, insertion_schensted, lis_dp, shadow_lines, shadow_set,
    shadow_set_to_permutation, viennot_schensted, Cell, Permutation, RookPlacement, Tableau,
};
use rookring::{Field, Limits};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{CliError, Command, VerifyTarget};

type Outcome = Result<(Report, u8), CliError>;

pub fn dispatch(command: &Command, field: Field) -> Outcome {
    let limits = Limits::default();
    let report = match command {
        Command::Rsk { perm } => rsk(perm, field)?,
        Command::Shadow { input } => shadow(input, field)?,
        Command::CheckRook { input } => check_rook(input, field)?,
        Command::Basis(s) => basis(s.n, field, &limits)?,
        Command::Hilbert(s) => hilbert(s.n, field, &limits)?,
        Command::Reduce { size, poly, input } => reduce(size.n, field, poly.as_deref(), input.as_deref())?,
        Command::LocalBasis { size, k } => local_basis(size.n, *k, field, &limits)?,
        Command::Localize { size, stat, k } => localize(size.n, stat, *k, field, &limits)?,
        Command::CharTable(s) => char_table(s.n, field, &limits)?,
        Command::Alpha { size, k } => alpha_command(size.n, *k, field, &limits)?,
        Command::Verify {
            what,
            size,
            identity_only,
            samples,
            seed,
            tables,
        } => {
            let n = size.n;
            return match what {
                VerifyTarget::Rsk => Ok((verify_rsk(n, field, &limits)?, 0)),
                VerifyTarget::Basis => Ok((verify_basis(n, field, &limits)?, 0)),
                VerifyTarget::Hilbert => Ok((verify_hilbert(n, field, &limits)?, 0)),
                VerifyTarget::Graded => Ok((verify_graded(n, field, *identity_only, &limits)?, 0)),
                VerifyTarget::Membership => Ok((verify_membership(n, field, *samples, *seed, &limits)?, 0)),
                VerifyTarget::NovakRhoades | VerifyTarget::Equivariant => {
                    verify_conjecture(*what, n, field, *tables, &limits)
                }
            };
        }
    };
    Ok((report, 0))
}

fn require_rationals(field: Field, command: &str) -> Result<(), CliError> {
    if field != Field::Rationals {
        return Err(CliError::Usage(format!(
            "`{command}` works with characters of S_n and requires --field QQ, got {field}"
        )));
    }
    Ok(())
}

fn tableau_rows(t: &Tableau) -> Vec<String> {
    t.rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect()
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn rsk(perm: &str, field: Field) -> Result<Report, CliError> {
    let w: Permutation = perm.parse()?;
    let pair = insertion_schensted(&w);
    let mut r = Report::new("rsk", w.n(), field);
    r.count = 1;
    r.lines = vec![
        format!("P {}", pair.p),
        format!("Q {}", pair.q),
        format!("shape {}", join(&pair.shape(), ",")),
    ];
    r.columns = vec!["tableau".into(), "row".into(), "entries".into()];
    for (name, t) in [("P", &pair.p), ("Q", &pair.q)] {
        for (k, row) in tableau_rows(t).into_iter().enumerate() {
            r.rows.push(vec![name.into(), (k + 1).to_string(), row]);
        }
    }
    r.data = json!({
        "permutation": w.to_string(),
        "p": pair.p.rows(),
        "q": pair.q.rows(),
        "shape": pair.shape(),
    });
    Ok(r)
}

/// A permutation in one-line notation, a rook placement file, or inline
/// placement text.
fn read_placement(input: &str) -> Result<RookPlacement, CliError> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)?;
        return Ok(text.trim().parse()?);
    }
    if input.contains(';') {
        return Ok(input.parse()?);
    }
    Ok(input.parse::<Permutation>()?.graph())
}

fn cells(list: &[Cell]) -> String {
    join(list, " ")
}

fn shadow(input: &str, field: Field) -> Result<Report, CliError> {
    let placement = read_placement(input)?;
    let diagram = shadow_lines(&placement);
    let set = shadow_set(&placement);
    let mut r = Report::new("shadow", placement.n(), field);
    r.count = diagram.lines.len();
    r.columns = ["line", "points", "corners", "ray_x", "ray_y"].map(String::from).to_vec();
    for (k, line) in diagram.lines.iter().enumerate() {
        r.lines.push(format!(
            "line {}: points {}; corners {}; rays x={} y={}",
            k + 1,
            cells(&line.points),
            cells(&line.corners),
            line.ray_x,
            line.ray_y
        ));
        r.rows.push(vec![
            (k + 1).to_string(),
            cells(&line.points),
            cells(&line.corners),
            line.ray_x.to_string(),
            line.ray_y.to_string(),
        ]);
    }
    r.lines.push(format!("shadow set {set}"));
    r.data = json!({
        "placement": placement.to_string(),
        "lines": diagram.lines,
        "shadow_set": set.to_string(),
    });
    Ok(r)
}

fn signs(seq: &[i8]) -> String {
    join(seq, ",")
}

fn check_rook(input: &str, field: Field) -> Result<Report, CliError> {
    let placement = read_placement(input)?;
    let check = ballot_check(&placement);
    let mut r = Report::new("check-rook", placement.n(), field);
    r.count = 1;
    r.lines = vec![
        format!("placement {placement}"),
        format!("x {}", signs(&check.x_seq)),
        format!("y {}", signs(&check.y_seq)),
        format!("shadow_set {}", check.is_shadow_set),
    ];
    r.columns = ["placement", "shadow_set", "permutation", "rewrite"].map(String::from).to_vec();
    let mut data = json!({
        "placement": placement.to_string(),
        "x_seq": check.x_seq,
        "y_seq": check.y_seq,
        "shadow_set": check.is_shadow_set,
    });
    if check.is_shadow_set {
        let w = shadow_set_to_permutation(&placement)?;
        r.lines.push(format!("permutation {w}"));
        r.rows.push(vec![placement.to_string(), "true".into(), w.to_string(), String::new()]);
        data["permutation"] = json!(w.to_string());
    } else {
        let rw = marching_rewrite(&placement, field)?;
        let axis = match rw.axis {
            MarchingAxis::X => "x",
            MarchingAxis::Y => "y",
        };
        r.lines.push(format!(
            "rewrite axis={axis} a={} S={} T={}",
            rw.a,
            join(&rw.s, ","),
            join(&rw.t, ",")
        ));
        r.lines.push(format!("polynomial {}", rw.polynomial));
        r.rows.push(vec![placement.to_string(), "false".into(), String::new(), rw.polynomial.to_string()]);
        data["rewrite"] = json!({
            "axis": axis,
            "a": rw.a,
            "s": rw.s,
            "t": rw.t,
            "reduced": rw.reduced.to_string(),
            "polynomial": polynomial_to_json(&rw.polynomial),
        });
    }
    r.data = data;
    Ok(r)
}

fn basis(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    let list = standard_monomial_basis(n, limits)?;
    let mut r = Report::new("basis", n, field);
    r.count = list.len();
    r.columns = ["permutation", "monomial", "degree"].map(String::from).to_vec();
    let mut data = Vec::new();
    for (w, m) in &list {
        r.lines.push(format!("{w}  {m}"));
        r.rows.push(vec![w.to_string(), m.to_string(), m.degree().to_string()]);
        data.push(json!({"permutation": w.to_string(), "monomial": m.to_string(), "degree": m.degree()}));
    }
    r.data = Value::Array(data);
    Ok(r)
}

fn hilbert(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    let h = hilbert_series(n, limits)?;
    let mut r = Report::new("hilbert", n, field);
    r.count = h.len();
    r.lines = vec![join(&h, ",")];
    r.columns = vec!["degree".into(), "dimension".into()];
    r.rows = h.iter().enumerate().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
    r.data = json!({ "coefficients": h });
    Ok(r)
}

fn reduce(n: usize, field: Field, poly: Option<&str>, input: Option<&Path>) -> Result<Report, CliError> {
    let f = match (poly, input) {
        (Some(text), None) => parse_polynomial(text, n, field)?,
        (None, Some(path)) => {
            let terms: Vec<JsonTerm> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            polynomial_from_json(&terms, n, field)?
        }
        _ => return Err(CliError::Usage("give either a polynomial or --input FILE".into())),
    };
    let nf = Reducer::new(n, field).normal_form(&f);
    let mut r = Report::new("reduce", n, field);
    r.count = nf.len();
    r.lines = vec![nf.to_string()];
    r.columns = vec!["coefficient".into(), "monomial".into()];
    r.rows = nf.terms().map(|(m, c)| vec![c.to_string(), m.to_string()]).collect();
    r.data = json!({ "input": polynomial_to_json(&f), "normal_form": polynomial_to_json(&nf) });
    Ok(r)
}

fn local_basis(n: usize, k: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    let basis = junta_basis(n, k, limits)?;
    let mut r = Report::new("local-basis", n, field);
    r.count = basis.elements.len();
    r.columns = ["size", "monomial", "placement"].map(String::from).to_vec();
    let mut data = Vec::new();
    for e in &basis.elements {
        let m = GridMonomial::of_placement(e);
        r.lines.push(format!("{}  {m}", e.len()));
        r.rows.push(vec![e.len().to_string(), m.to_string(), e.to_string()]);
        data.push(json!({"size": e.len(), "monomial": m.to_string(), "placement": e.to_string()}));
    }
    r.data = json!({ "k": k, "elements": data });
    Ok(r)
}

fn read_statistic(n: usize, stat: &str, field: Field, limits: &Limits) -> Result<PermutationStatistic, CliError> {
    if let Ok(b) = stat.parse::<BuiltinStatistic>() {
        if !Path::new(stat).is_file() {
            return Ok(builtin_statistic(b, n, field, limits)?);
        }
    }
    if !Path::new(stat).is_file() {
        return Err(CliError::Usage(format!(
            "{stat:?} is neither a built-in statistic (exc, inv, peak, lis, constant) nor a readable file"
        )));
    }
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(stat)?;
    let mut pairs = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != 2 {
            return Err(CliError::Usage(format!(
                "{stat}: record {} has {} fields, expected `permutation,value`",
                line + 1,
                record.len()
            )));
        }
        let perm_text = if record[0].contains(',') {
            record[0].to_string()
        } else {
            record[0].split_whitespace().collect::<Vec<_>>().join(",")
        };
        let w: Permutation = perm_text.parse()?;
        pairs.push((w, field.parse_scalar(&record[1])?));
    }
    Ok(PermutationStatistic::from_pairs(n, field, pairs, limits)?)
}

fn localize(n: usize, stat: &str, k: Option<usize>, field: Field, limits: &Limits) -> Result<Report, CliError> {
    let f = read_statistic(n, stat, field, limits)?;
    let k = match k {
        Some(k) => k,
        None => minimal_locality(&f, limits)?,
    };
    let mut r = Report::new("localize", n, field);
    r.columns = ["coefficient", "monomial", "placement"].map(String::from).to_vec();
    match decompose(&f, k, limits)? {
        Decomposed::Local(dec) => {
            let terms: Vec<_> = dec.nonzero().collect();
            r.count = terms.len();
            r.lines.push(format!("local k={k}"));
            let mut data = Vec::new();
            for (placement, c) in terms {
                let m = GridMonomial::of_placement(placement);
                r.lines.push(format!("{c}  {m}"));
                r.rows.push(vec![c.to_string(), m.to_string(), placement.to_string()]);
                data.push(json!({"coefficient": c.to_string(), "monomial": m.to_string(), "placement": placement.to_string()}));
            }
            r.data = json!({ "k": k, "local": true, "coefficients": data });
        }
        Decomposed::NotKLocal { residual } => {
            let support: Vec<String> = residual
                .pairs()
                .filter(|(_, v)| !v.is_zero())
                .map(|(w, v)| format!("{w}:{v}"))
                .collect();
            r.count = 0;
            r.lines.push(format!("not local k={k}"));
            r.lines.push(format!("residual nonzero at {} permutations", support.len()));
            r.data = json!({ "k": k, "local": false, "residual_support": support });
        }
    }
    Ok(r)
}

fn char_table(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    require_rationals(field, "char-table")?;
    let t = CharacterTable::new(n, limits)?;
    let labels: Vec<String> = t.partitions.iter().map(ToString::to_string).collect();
    let mut r = Report::new("char-table", n, field);
    r.count = labels.len();
    r.columns = std::iter::once("lambda".to_string()).chain(labels.iter().cloned()).collect();
    r.lines.push(format!("classes {}", labels.join(" | ")));
    for (lambda, row) in labels.iter().zip(&t.values) {
        r.lines.push(format!("{lambda}: {}", join(row, " ")));
        r.rows.push(std::iter::once(lambda.clone()).chain(row.iter().map(ToString::to_string)).collect());
    }
    r.data = json!({
        "partitions": labels,
        "values": t.values,
        "class_sizes": t.class_sizes.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(r)
}

fn alpha_command(n: usize, k: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    require_rationals(field, "alpha")?;
    let t = CharacterTable::new(n, limits)?;
    let a = alpha(&t, k)?;
    let mut r = Report::new("alpha", n, field);
    r.count = t.partitions.len();
    r.columns = vec!["cycle_type".into(), "value".into()];
    let mut values = Vec::new();
    for (mu, v) in t.partitions.iter().zip(&a.values) {
        r.lines.push(format!("{mu}: {v}"));
        r.rows.push(vec![mu.to_string(), v.to_string()]);
        values.push(json!({"cycle_type": mu.to_string(), "value": v.to_string()}));
    }
    let mult: Vec<Value> = a
        .decompose(&t)?
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| json!({"lambda": l.to_string(), "multiplicity": c.to_string()}))
        .collect();
    r.data = json!({ "k": k, "values": values, "multiplicities": mult });
    Ok(r)
}

fn verification(command: &str, n: usize, field: Field, count: usize, summary: String) -> Report {
    let mut r = Report::new(command, n, field);
    r.count = count;
    r.lines = vec![format!("ok {summary}")];
    r.columns = vec!["check".into(), "count".into(), "result".into()];
    r.rows = vec![vec![command.to_string(), count.to_string(), "ok".into()]];
    r.data = json!({ "result": "ok", "summary": summary });
    r
}

fn fail(msg: String) -> CliError {
    CliError::Verification(msg)
}

fn verify_rsk(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    limits.check_enumeration(n)?;
    let perms = all_permutations(n);
    for w in &perms {
        if viennot_schensted(w) != insertion_schensted(w) {
            return Err(fail(format!("shadow lines and insertion disagree at {w}")));
        }
    }
    Ok(verification(
        "verify rsk",
        n,
        field,
        perms.len(),
        format!("shadow-line and insertion tableaux agree on all {} permutations", perms.len()),
    ))
}

fn verify_basis(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    limits.check_enumeration(n)?;
    let shadows: BTreeSet<GridMonomial> = standard_monomial_basis(n, limits)?.into_iter().map(|(_, m)| m).collect();
    let mut reducer = Reducer::new(n, field);
    let mut irreducible = BTreeSet::new();
    for placement in RookPlacement::enumerate_all(n) {
        let m = GridMonomial::of_placement(&placement);
        let p = Polynomial::monomial(n, field, m.clone(), field.one());
        if reducer.normal_form(&p) == p {
            irreducible.insert(m);
        }
    }
    if irreducible != shadows {
        return Err(fail(format!(
            "{} irreducible rook monomials but {} shadow monomials",
            irreducible.len(),
            shadows.len()
        )));
    }
    Ok(verification(
        "verify basis",
        n,
        field,
        shadows.len(),
        format!("the {} irreducible rook monomials are the shadow monomials", shadows.len()),
    ))
}

fn verify_hilbert(n: usize, field: Field, limits: &Limits) -> Result<Report, CliError> {
    let h = hilbert_series(n, limits)?;
    let mut counts = vec![0usize; n + 1];
    for w in all_permutations(n) {
        counts[lis_dp(w.word())] += 1;
    }
    let expected: Vec<usize> = (0..n).map(|d| counts[n - d]).collect();
    if h != expected {
        return Err(fail(format!("Hilbert series {h:?}, lis histogram reversed {expected:?}")));
    }
    Ok(verification(
        "verify hilbert",
        n,
        field,
        factorial(n),
        format!("Hilbert series {} matches the lis histogram", join(&h, ",")),
    ))
}

fn verify_graded(n: usize, field: Field, identity_only: bool, limits: &Limits) -> Result<Report, CliError> {
    require_rationals(field, "verify graded")?;
    let table = CharacterTable::new(n, limits)?;
    let classes = partitions(n);
    let pairs: Vec<(Partition, Partition)> = if identity_only {
        let id = classes.last().expect("S_n has a class").clone();
        vec![(id.clone(), id)]
    } else {
        classes
            .iter()
            .flat_map(|a| classes.iter().map(move |b| (a.clone(), b.clone())))
            .collect()
    };
    let mut identities = Vec::new();
    for k in 0..n {
        let got = graded_character_on(n, k, limits, Some(&pairs))?;
        let want = expected_graded_character(&table, k)?;
        for (mu, nu) in &pairs {
            let a = table.index_of(mu)?;
            let b = table.index_of(nu)?;
            if got.values[a][b] != want.values[a][b] {
                return Err(fail(format!(
                    "degree {k} at ({mu}), ({nu}): trace {} but characters give {}",
                    got.values[a][b], want.values[a][b]
                )));
            }
        }
        identities.push(got.at_identity());
    }
    let count = pairs.len() * n;
    Ok(verification(
        "verify graded",
        n,
        field,
        count,
        format!(
            "{count} trace values match the characters; dimensions {}",
            join(&identities, ",")
        ),
    ))
}

fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: u32, field: Field) -> Result<Polynomial, CliError> {
    let mut f = Polynomial::zero(n, field);
    for _ in 0..rng.gen_range(1..=5) {
        let factors: Vec<(Cell, u32)> = (0..d)
            .map(|_| (Cell::new(rng.gen_range(1..=n), rng.gen_range(1..=n)), 1))
            .collect();
        f.add_term(GridMonomial::from_factors(n, factors)?, field.from_i64(rng.gen_range(-9..=9)));
    }
    Ok(f)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .map(|mask| (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

fn verify_membership(n: usize, field: Field, samples: usize, seed: u64, limits: &Limits) -> Result<Report, CliError> {
    limits.check_enumeration(n)?;
    let mut reducer = Reducer::new(n, field);
    let mut checked = 0;
    for g in ideal_generators(n, field)? {
        if !reducer.normal_form(&g).is_zero() {
            return Err(fail(format!("generator {g} has a nonzero normal form")));
        }
        checked += 1;
    }
    let subs = subsets(n);
    for s in &subs {
        for t in &subs {
            if s.len() + t.len() <= n || s.len() > t.len() {
                continue;
            }
            for g in [injection_sum_a(s, t, n, field)?, injection_sum_b(s, t, n, field)?] {
                if !reducer.normal_form(&g).is_zero() {
                    return Err(fail(format!("injection sum for S={s:?}, T={t:?} has a nonzero normal form")));
                }
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let d = rng.gen_range(0..=n as u32);
        let f = random_homogeneous(&mut rng, n, d, field)?;
        let diff = f.sub(&reducer.normal_form(&f));
        if !ideal_membership(&diff, limits)? {
            return Err(fail(format!("f - NF(f) is not in the ideal for f = {f}")));
        }
        checked += 1;
    }
    Ok(verification(
        "verify membership",
        n,
        field,
        checked,
        format!("{checked} ideal elements reduce to zero or pass the membership test"),
    ))
}

fn verify_conjecture(what: VerifyTarget, n: usize, field: Field, tables: bool, limits: &Limits) -> Outcome {
    require_rationals(field, "verify")?;
    let t = CharacterTable::new(n, limits)?;
    let (name, label, reports): (&str, &str, Vec<ConjectureReport>) = match what {
        VerifyTarget::NovakRhoades => ("verify novak-rhoades", "k", check_novak_rhoades(&t, tables)?),
        _ => ("verify equivariant", "d", check_equivariant_conjecture(&t, tables)?),
    };
    let mut r = Report::new(name, n, field);
    r.count = reports.len();
    r.columns = [label, "verdict", "nu", "rho", "source", "target"].map(String::from).to_vec();
    let mut violated = false;
    for rep in &reports {
        let verdict = match rep.verdict {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
        };
        violated |= rep.verdict == Verdict::Violated;
        let mut line = format!("{label}={} {verdict}", rep.d_or_k);
        let mut row = vec![rep.d_or_k.to_string(), verdict.to_string(), String::new(), String::new(), String::new(), String::new()];
        if let Some(p) = &rep.violating_pair {
            let rho = p.rho.clone().unwrap_or_default();
            line.push_str(&format!(" at nu=({}) rho=({rho}) source={} target={}", p.nu, p.source, p.target));
            row = vec![rep.d_or_k.to_string(), verdict.into(), p.nu.clone(), rho, p.source.to_string(), p.target.to_string()];
        }
        r.lines.push(line);
        r.rows.push(row);
    }
    r.data = serde_json::to_value(&reports)?;
    Ok((r, if violated { 3 } else { 0 }))
}
