//! Command implementations and their renderings as JSON, CSV and markdown.
//!
//! Every command builds a [`Report`]: a JSON document (keys sorted, integers
//! only) plus the same content as flat tables for CSV and markdown.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::catalog::identify;
use crate::degree::{build_degree_hom, validate_degree_hom, DegreeTable, Provenance};
use crate::endo::EndomorphismMonoid;
use crate::even::{check_dimension, EvenElement};
use crate::group::FiniteGroup;
use crate::odd::{SpaceFormElement, SpaceFormMonoid};
use crate::oracle::cross_check;
use crate::Error;

/// Rows of the truncated multiplication table in `monoid` output.
pub const TABLE_LIMIT: usize = 8;

/// Random triples drawn by the axiom suite in `check`.
pub const CHECK_TRIPLES: usize = 10_000;

const CHECK_SEED: u64 = 0x5eed_0f_5f0e;

pub(crate) fn serialize_bigint<S: Serializer>(k: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Quaternion(usize),
    Table(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Config(format!("group spec {s:?} must look like kind:value")))?;
        let number = |a: &str| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("{a:?} is not a non-negative integer")))
        };
        match kind.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(number(arg)?)),
            "quaternion" => Ok(GroupSpec::Quaternion(number(arg)?)),
            "table" => Ok(GroupSpec::Table(PathBuf::from(arg))),
            other => Err(Error::Config(format!(
                "unknown group kind {other:?} (expected cyclic, quaternion or table)"
            ))),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "cyclic:{m}"),
            GroupSpec::Quaternion(m) => write!(f, "quaternion:{m}"),
            GroupSpec::Table(p) => write!(f, "table:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, Error> {
        Ok(match self {
            GroupSpec::Cyclic(m) => FiniteGroup::cyclic(*m)?,
            GroupSpec::Quaternion(m) => FiniteGroup::generalized_quaternion(*m)?,
            GroupSpec::Table(path) => FiniteGroup::from_json_file(path)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(Error::Config(format!("unknown format {s:?}"))),
        }
    }
}

/// Everything a command needs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: Option<GroupSpec>,
    pub n: u64,
    pub d_table: Option<PathBuf>,
    pub format: Format,
    pub window: u64,
    /// Largest modulus swept by `census`.
    pub max_m: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group: None,
            n: 1,
            d_table: None,
            format: Format::Json,
            window: 10,
            max_m: 24,
        }
    }
}

impl RunConfig {
    pub fn cyclic(m: usize, n: u64) -> Self {
        RunConfig {
            group: Some(GroupSpec::Cyclic(m)),
            n,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), Error> {
        if self.window < 1 {
            return Err(Error::Config("window must be at least 1".into()));
        }
        Ok(())
    }

    fn group_spec(&self) -> Result<&GroupSpec, Error> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Config("a group spec is required (--group)".into()))
    }

    /// Group, endomorphisms and degree map for this configuration.
    pub fn context(&self) -> Result<SpaceFormMonoid, Error> {
        self.validate()?;
        let group = Arc::new(self.group_spec()?.build()?);
        self.context_for(group)
    }

    fn context_for(&self, group: Arc<FiniteGroup>) -> Result<SpaceFormMonoid, Error> {
        let endos = Arc::new(EndomorphismMonoid::enumerate(group)?);
        let table = match &self.d_table {
            Some(path) => Some(DegreeTable::from_json_file(path)?),
            None => None,
        };
        Ok(SpaceFormMonoid::new(build_degree_hom(
            endos,
            self.n,
            table.as_ref(),
        )?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: &str, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub data: Value,
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => render_json(&self.data),
            Format::Csv => self.render_csv(),
            Format::Md => self.render_md(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (i, table) in self.tables.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# {}", table.title);
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.headers).expect("write to memory");
            for row in &table.rows {
                w.write_record(row).expect("write to memory");
            }
            out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf8"));
        }
        out
    }

    fn render_md(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            let _ = writeln!(out, "{note}");
        }
        for table in &self.tables {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "### {}\n", table.title);
            out.push_str(&markdown_table(table));
        }
        out
    }
}

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn markdown_table(table: &Table) -> String {
    let cols = table.headers.len();
    let escape = |c: &String| c.replace('|', "\\|");
    let headers: Vec<String> = table.headers.iter().map(escape).collect();
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .map(|r| r.iter().map(escape).collect())
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(3)).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = (0..cols)
            .map(|i| {
                let c = cells.get(i).map(String::as_str).unwrap_or("");
                format!("{c}{}", " ".repeat(widths[i] - c.chars().count()))
            })
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(&headers);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "|-{}-|", rule.join("-|-"));
    for row in &rows {
        out.push_str(&line(row));
    }
    out
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report data serializes")
}

fn coset_label(m: &SpaceFormMonoid, alpha: usize) -> String {
    if m.modulus() == 1 {
        "Z".into()
    } else {
        format!("{} + {}Z", m.d(alpha).value(), m.modulus())
    }
}

fn join_degrees(elems: &[SpaceFormElement]) -> String {
    elems
        .iter()
        .map(|e| e.degree().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn group_summary(m: &SpaceFormMonoid, spec: Option<&GroupSpec>) -> Value {
    let g = m.group();
    json!({
        "spec": spec.map(ToString::to_string),
        "order": g.order(),
        "cyclic": g.is_cyclic(),
        "abelian": g.is_abelian(),
    })
}

/// `M(G,n)`: one row per endomorphism with its coset and the degrees inside
/// the display window, then products of coset representatives.
pub fn cmd_monoid(config: &RunConfig) -> Result<Report, Error> {
    let m = config.context()?;
    monoid_report(&m, config)
}

pub fn monoid_report(m: &SpaceFormMonoid, config: &RunConfig) -> Result<Report, Error> {
    let endos = m.endomorphisms();
    let residues = endos.cyclic_residues();
    let mut rows = Vec::new();
    let mut table = Table::new(
        "endomorphisms",
        &["index", "residue", "automorphism", "d", "coset", "representative", "window_degrees"],
    );
    for e in endos.iter() {
        let a = e.index();
        let window = m.coset_window(a, config.window);
        let rep = m.representative(a);
        let residue = residues.as_ref().map(|r| r[a]);
        rows.push(json!({
            "index": a,
            "images": e.images(),
            "residue": residue,
            "automorphism": e.is_automorphism(),
            "d": m.d(a).value(),
            "coset": coset_label(m, a),
            "representative": rep.degree().to_string(),
            "window_degrees": window.iter().map(|x| x.degree().to_string()).collect::<Vec<_>>(),
        }));
        table.push(vec![
            a.to_string(),
            residue.map(|r| r.to_string()).unwrap_or_default(),
            e.is_automorphism().to_string(),
            m.d(a).value().to_string(),
            coset_label(m, a),
            rep.degree().to_string(),
            join_degrees(&window),
        ]);
    }

    let shown = endos.len().min(TABLE_LIMIT);
    let reps: Vec<SpaceFormElement> = (0..shown).map(|a| m.representative(a)).collect();
    let mut products = Vec::new();
    let mut headers = vec!["x·y".to_string()];
    headers.extend(reps.iter().map(ToString::to_string));
    let mut product_table = Table {
        title: "representative products".into(),
        headers,
        rows: Vec::new(),
    };
    for x in &reps {
        let row: Vec<SpaceFormElement> = reps
            .iter()
            .map(|y| m.multiply(x, y))
            .collect::<Result<_, _>>()?;
        let mut cells = vec![x.to_string()];
        cells.extend(row.iter().map(ToString::to_string));
        product_table.push(cells);
        products.push(row.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let data = json!({
        "command": "monoid",
        "group": group_summary(m, config.group.as_ref()),
        "n": m.n(),
        "degree_map": m.degree_hom().provenance(),
        "endomorphism_count": endos.len(),
        "automorphism_count": endos.automorphism_count(),
        "window": config.window,
        "endomorphisms": rows,
        "product_table": {
            "representatives": reps.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "products": products,
            "truncated": endos.len() > shown,
        },
    });
    let notes = vec![format!(
        "M(G,n) for |G| = {}, n = {}: {} endomorphisms, elements (#alpha, degree)",
        m.modulus(),
        m.n(),
        endos.len()
    )];
    Ok(Report {
        data,
        tables: vec![table, product_table],
        notes,
    })
}

/// `E(G,n)`: elements, Cayley table, and a name when the fingerprint fixes one.
pub fn cmd_equiv(config: &RunConfig) -> Result<Report, Error> {
    let m = config.context()?;
    let e = m.equivalence_group()?;
    let ident = identify(&e.as_group());
    let orders = e.element_orders();

    let mut elems = Table::new("elements", &["index", "alpha", "degree", "order"]);
    for (i, x) in e.elements().iter().enumerate() {
        elems.push(vec![
            i.to_string(),
            x.alpha().to_string(),
            x.degree().to_string(),
            orders[i].to_string(),
        ]);
    }
    let mut headers = vec!["·".to_string()];
    headers.extend((0..e.order()).map(|i| i.to_string()));
    let mut cayley = Table {
        title: "cayley table (by element index)".into(),
        headers,
        rows: Vec::new(),
    };
    for (i, row) in e.table().iter().enumerate() {
        let mut cells = vec![i.to_string()];
        cells.extend(row.iter().map(ToString::to_string));
        cayley.push(cells);
    }
    let name = ident.name().map(str::to_string);
    let data = json!({
        "command": "equiv",
        "group": group_summary(&m, config.group.as_ref()),
        "n": m.n(),
        "order": e.order(),
        "elements": to_value(&e.elements()),
        "element_orders": orders,
        "table": e.table(),
        "abelian": e.is_abelian(),
        "identification": {
            "name": name,
            "candidates": ident.candidates,
            "order_profile": ident.fingerprint.order_profile,
        },
    });
    let notes = vec![format!(
        "E(G,n) has order {}; type: {}",
        e.order(),
        match &ident.candidates[..] {
            [] => "not in catalogue".to_string(),
            [one] => one.clone(),
            many => format!("one of {}", many.join(", ")),
        }
    )];
    Ok(Report {
        data,
        tables: vec![elems, cayley],
        notes,
    })
}

/// The monoid of `RP^{2n}`. Output does not depend on `n`.
pub fn cmd_even(config: &RunConfig) -> Result<Report, Error> {
    check_dimension(config.n)?;
    let classes = [
        ("A0", "degrees 0 mod 4; trivial on pi_1, lifts through the sphere"),
        ("A2", "degrees 2 mod 4; trivial on pi_1, lifts through the sphere"),
        ("Odd(k)", "one class per odd k; identity on pi_1, lifts to a degree-k sphere map"),
    ];
    let mut class_table = Table::new("classes", &["class", "description"]);
    for (c, d) in classes {
        class_table.push(vec![c.into(), d.into()]);
    }
    let labels = ["A0", "A2", "Odd(b)"];
    let samples = [
        EvenElement::A0,
        EvenElement::A2,
        EvenElement::odd(3).expect("odd"),
    ];
    let mut mult = Table::new("class multiplication", &["x·y", "A0", "A2", "Odd(b)"]);
    let mut rows = Vec::new();
    for (i, x) in samples.iter().enumerate() {
        let row_label = if i == 2 { "Odd(a)" } else { labels[i] };
        let cells: Vec<String> = samples
            .iter()
            .map(|y| match x.multiply(y) {
                EvenElement::Odd(_) => "Odd(ab)".to_string(),
                other => other.to_string(),
            })
            .collect();
        rows.push(json!({ "x": row_label, "products": cells }));
        let mut full = vec![row_label.to_string()];
        full.extend(cells);
        mult.push(full);
    }
    let data = json!({
        "command": "even",
        "classes": classes.iter().map(|(c, d)| json!({"class": c, "description": d})).collect::<Vec<_>>(),
        "multiplication": rows,
        "odd_rule": "Odd(a)·Odd(b) = Odd(ab)",
        "identity": EvenElement::identity(),
        "units": [EvenElement::odd(1).expect("odd"), EvenElement::odd(-1).expect("odd")],
        "commutative": true,
    });
    Ok(Report {
        data,
        tables: vec![class_table, mult],
        notes: vec!["Self-maps of RP^{2n}, any n >= 1: integers under multiplication, 0 and 2 mod 4 each collapsed to one class".into()],
    })
}

/// For each `k`, whether it is the degree of some self-map, and over which
/// endomorphisms.
pub fn cmd_degrees(config: &RunConfig, ks: &[BigInt]) -> Result<Report, Error> {
    let m = config.context()?;
    let realizable = m.realizable_degrees();
    let mut table = Table::new("degree queries", &["k", "residue", "realizable", "classes"]);
    let mut queries = Vec::new();
    for k in ks {
        let classes = m.classes_containing(k);
        let r = crate::degree::Residue::from_bigint(k, m.modulus()).value();
        let ok = realizable.contains(k);
        debug_assert_eq!(ok, !classes.is_empty());
        queries.push(json!({
            "k": k.to_string(),
            "residue": r,
            "realizable": ok,
            "classes": classes,
        }));
        table.push(vec![
            k.to_string(),
            r.to_string(),
            if ok { "yes" } else { "no" }.into(),
            classes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        ]);
    }
    let data = json!({
        "command": "degrees",
        "group": group_summary(&m, config.group.as_ref()),
        "n": m.n(),
        "modulus": realizable.modulus,
        "realizable_residues": realizable.residues,
        "queries": queries,
    });
    Ok(Report {
        data,
        tables: vec![table],
        notes: vec![format!(
            "realizable residues mod {}: {:?}",
            realizable.modulus, realizable.residues
        )],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub report: Report,
    pub passed: bool,
    pub warnings: Vec<String>,
}

/// Run every applicable invariant suite for the configured group.
///
/// Admissibility is reported as a warning and never fails the check.
/// Errors building the degree map are returned as `Err`, after any warnings
/// were collected into `warnings_out`.
pub fn cmd_check(config: &RunConfig, warnings_out: &mut Vec<String>) -> Result<CheckOutcome, Error> {
    config.validate()?;
    let group = Arc::new(config.group_spec()?.build()?);
    let mut suites = Vec::new();

    suites.push(match group.verify() {
        Ok(()) => suite("group-axioms", true, "Latin square, identity, inverses, associativity"),
        Err(e) => suite("group-axioms", false, &e.to_string()),
    });

    let adm = group.rank_one_check();
    if !adm.passed {
        warnings_out.push(format!(
            "rank-one condition fails at primes {:?}: this group cannot act freely on a sphere",
            adm.failing_primes
        ));
    }

    let m = config.context_for(group.clone())?;
    let endos = m.endomorphisms();

    suites.push(endomorphism_suite(endos));

    let validation = validate_degree_hom(m.degree_hom());
    suites.push(SuiteResult {
        suite: "degree-map".into(),
        passed: validation.passed,
        detail: if validation.passed {
            format!("d(id) = 1, multiplicative on {} pairs, units on Aut", endos.len().pow(2))
        } else {
            validation
                .violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ")
        },
    });

    let axioms = m.check_axioms(config.window, CHECK_TRIPLES, CHECK_SEED)?;
    suites.push(SuiteResult {
        suite: "monoid-axioms".into(),
        passed: axioms.passed,
        detail: axioms.failure.clone().unwrap_or_else(|| {
            format!(
                "closure on {} products within |k| <= {}, {} associativity/identity triples",
                axioms.closure_products, axioms.window, axioms.triples
            )
        }),
    });

    let e = m.equivalence_group()?;
    let expected = if m.modulus() <= 2 { 2 } else { m.sign_automorphism_count() };
    let invertible_ok = e.elements().iter().all(|x| m.is_invertible(x));
    suites.push(SuiteResult {
        suite: "units".into(),
        passed: e.order() == expected && invertible_ok,
        detail: format!("|E(G,n)| = {}, expected {expected}", e.order()),
    });

    if group.is_cyclic() && m.degree_hom().provenance() == Provenance::BuiltinCyclic {
        let window = 5 * m.modulus();
        let r = cross_check(m.modulus(), m.n(), window)?;
        suites.push(SuiteResult {
            suite: "oracle".into(),
            passed: r.passed,
            detail: r.discrepancy.clone().unwrap_or_else(|| {
                format!(
                    "{} elements and {} products agree within |k| <= {window}",
                    r.valid_elements, r.products_checked
                )
            }),
        });
    }

    let passed = suites.iter().all(|s| s.passed);
    let mut table = Table::new("suites", &["suite", "passed", "detail"]);
    for s in &suites {
        table.push(vec![s.suite.clone(), s.passed.to_string(), s.detail.clone()]);
    }
    let data = json!({
        "command": "check",
        "group": group_summary(&m, config.group.as_ref()),
        "n": m.n(),
        "passed": passed,
        "admissibility": adm,
        "warnings": warnings_out.clone(),
        "suites": suites,
    });
    Ok(CheckOutcome {
        report: Report {
            data,
            tables: vec![table],
            notes: warnings_out.iter().map(|w| format!("warning: {w}")).collect(),
        },
        passed,
        warnings: warnings_out.clone(),
    })
}

fn suite(name: &str, passed: bool, detail: &str) -> SuiteResult {
    SuiteResult {
        suite: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn endomorphism_suite(endos: &EndomorphismMonoid) -> SuiteResult {
    let g = endos.group();
    let n = endos.len();
    for e in endos.iter() {
        for x in g.elements() {
            for y in g.elements() {
                if e.apply(g.mul(x, y)) != g.mul(e.apply(x), e.apply(y)) {
                    return suite(
                        "endomorphisms",
                        false,
                        &format!("#{} breaks the homomorphism law at ({x}, {y})", e.index()),
                    );
                }
            }
        }
    }
    let id = endos.identity_index();
    for a in 0..n {
        if endos.compose_index(a, id) != a || endos.compose_index(id, a) != a {
            return suite("endomorphisms", false, &format!("identity is not neutral for #{a}"));
        }
    }
    // associativity on all triples when small, otherwise a fixed stride
    let step = if n <= 30 { 1 } else { n / 30 + 1 };
    for a in (0..n).step_by(step) {
        for b in (0..n).step_by(step) {
            let ab = endos.compose_index(a, b);
            for c in (0..n).step_by(step) {
                if endos.compose_index(ab, c) != endos.compose_index(a, endos.compose_index(b, c)) {
                    return suite(
                        "endomorphisms",
                        false,
                        &format!("composition not associative at ({a}, {b}, {c})"),
                    );
                }
            }
        }
    }
    suite(
        "endomorphisms",
        true,
        &format!("{n} endomorphisms, {} automorphisms, closed and associative", endos.automorphism_count()),
    )
}

/// Sweep cyclic groups `C_1 .. C_max_m` for the configured `n`.
pub fn cmd_census(config: &RunConfig) -> Result<Report, Error> {
    config.validate()?;
    if config.max_m == 0 {
        return Err(Error::Config("census needs --max-m >= 1".into()));
    }
    let mut table = Table::new(
        "cyclic census",
        &["m", "endomorphisms", "automorphisms", "units", "unit_type", "realizable_residues"],
    );
    let mut rows = Vec::new();
    for mm in 1..=config.max_m {
        let m = SpaceFormMonoid::cyclic(mm, config.n)?;
        let e = m.equivalence_group()?;
        let ident = identify(&e.as_group());
        let realizable = m.realizable_degrees();
        let type_name = ident.name().unwrap_or("?").to_string();
        rows.push(json!({
            "m": mm,
            "endomorphisms": m.endomorphisms().len(),
            "automorphisms": m.endomorphisms().automorphism_count(),
            "units": e.order(),
            "unit_type": type_name,
            "realizable_residues": realizable.residues,
        }));
        table.push(vec![
            mm.to_string(),
            m.endomorphisms().len().to_string(),
            m.endomorphisms().automorphism_count().to_string(),
            e.order().to_string(),
            type_name,
            realizable
                .residues
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" "),
        ]);
    }
    let data = json!({
        "command": "census",
        "n": config.n,
        "max_m": config.max_m,
        "rows": rows,
    });
    Ok(Report {
        data,
        tables: vec![table],
        notes: vec![format!("lens spaces S^{}/C_m, m <= {}", 2 * config.n + 1, config.max_m)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_spec_parsing() {
        assert_eq!("cyclic:5".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(5));
        assert_eq!(
            "quaternion:8".parse::<GroupSpec>().unwrap(),
            GroupSpec::Quaternion(8)
        );
        assert_eq!(
            "table:g.json".parse::<GroupSpec>().unwrap(),
            GroupSpec::Table("g.json".into())
        );
        assert!("cyclic".parse::<GroupSpec>().is_err());
        assert!("cyclic:x".parse::<GroupSpec>().is_err());
        assert!("dihedral:8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn markdown_alignment() {
        let mut t = Table::new("t", &["a", "long header"]);
        t.push(vec!["12345".into(), "x".into()]);
        let md = markdown_table(&t);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.chars().count() == lines[0].chars().count()));
    }

    #[test]
    fn monoid_c5_rows() {
        let r = cmd_monoid(&RunConfig::cyclic(5, 1)).unwrap();
        let ds: Vec<u64> = r.data["endomorphisms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row["d"].as_u64().unwrap())
            .collect();
        assert_eq!(ds, vec![0, 1, 4, 4, 1]);
    }

    #[test]
    fn zero_window_rejected() {
        let cfg = RunConfig {
            window: 0,
            ..RunConfig::cyclic(5, 1)
        };
        assert!(matches!(cmd_monoid(&cfg), Err(Error::Config(_))));
    }
}
