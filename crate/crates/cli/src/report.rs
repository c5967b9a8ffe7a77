//! Table and JSON rendering.

use std::collections::BTreeMap;

use minimal4::{Example, MinimalModelStage, RankTable};
use serde::Serialize;

use crate::input::Source;
use crate::Format;

#[derive(Serialize)]
pub struct RankReport {
    pub label: Option<String>,
    pub b2: usize,
    pub b2plus: Option<usize>,
    pub b2minus: Option<usize>,
    pub sigma: Option<i64>,
    pub max_degree: u32,
    pub formula: BTreeMap<u32, u64>,
    /// Every degree missing from `formula` has rank zero.
    pub finite_tail: bool,
    pub engine: Option<BTreeMap<u32, u64>>,
    pub engine_complete_through: Option<u32>,
    pub agree: Option<bool>,
    pub note: Option<String>,
    #[serde(skip)]
    formula_table: RankTable,
}

impl RankReport {
    pub fn new(
        src: &Source,
        max_degree: u32,
        formula: &RankTable,
        engine: Option<&(RankTable, u32)>,
        example: Option<&Example>,
        note: Option<String>,
    ) -> Self {
        let agree = engine.map(|(t, through)| {
            (2..=*through).all(|d| match formula.rank(d) {
                Some(f) => t.get(d) == Some(f),
                None => true,
            })
        });
        RankReport {
            label: example.map(Example::label).or_else(|| (!src.label.is_empty()).then(|| src.label.clone())),
            b2: src.b2,
            b2plus: src.split.map(|s| s.0),
            b2minus: src.split.map(|s| s.1),
            sigma: src.split.map(|(p, q)| p as i64 - q as i64),
            max_degree,
            formula: formula.entries().clone(),
            finite_tail: formula.finite_tail(),
            engine: engine.map(|(t, _)| t.entries().clone()),
            engine_complete_through: engine.map(|(_, k)| *k),
            agree,
            note,
            formula_table: formula.clone(),
        }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(self).expect("report serializes")),
            Format::Table => self.print_table(),
        }
    }

    fn print_table(&self) {
        println!("{}", header(self.label.as_deref().unwrap_or(""), self.b2, self.b2plus.zip(self.b2minus)));
        let Some(engine) = &self.engine else {
            println!("{:>4}  {:>12}", "r", "rk π_r⊗ℚ");
            for (d, r) in &self.formula {
                println!("{d:>4}  {r:>12}");
            }
            self.print_tail_note();
            return;
        };
        let through = self.engine_complete_through.unwrap_or(self.max_degree);
        let mut degrees: Vec<u32> = (2..=through).collect();
        degrees.extend(self.formula.keys().copied().filter(|&d| d > through));
        println!("{:>4}  {:>12}  {:>12}  verdict", "r", "formula", "engine");
        for d in degrees {
            let f = self.formula_table.rank(d);
            let e = if d <= through { engine.get(&d).copied() } else { None };
            let verdict = match (f, e) {
                (Some(a), Some(b)) if a == b => "agree",
                (Some(_), Some(_)) => "DIFFER",
                _ => "",
            };
            println!("{d:>4}  {:>12}  {:>12}  {verdict}", cell(f), cell(e));
        }
        self.print_tail_note();
        if let Some(note) = &self.note {
            println!("{note}");
        }
    }

    fn print_tail_note(&self) {
        if self.finite_tail {
            println!("all unlisted ranks vanish (rationally elliptic)");
        } else if let Some(top) = self.formula.keys().next_back() {
            println!("the closed form determines degrees 2 through {top} only");
        }
    }
}

fn cell(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn header(label: &str, b2: usize, split: Option<(usize, usize)>) -> String {
    let numbers = match split {
        Some((p, q)) => format!("b₂ = {b2}, b₂⁺ = {p}, b₂⁻ = {q}, σ = {}", p as i64 - q as i64),
        None => format!("b₂ = {b2}"),
    };
    if label.is_empty() {
        numbers
    } else {
        format!("{label}: {numbers}")
    }
}

pub fn print_model(src: &Source, stage: &MinimalModelStage) {
    println!("{} (model through degree {})", header(&src.label, src.b2, Some(src.model_split())), stage.k());
    let gens = stage.generators();
    let width = gens.iter().map(|g| g.name.len()).max().unwrap_or(0);
    for (i, g) in gens.iter().enumerate() {
        let d = stage.differential().image(i).display(gens).to_string();
        println!("{:<width$} ({}): d{} = {d}", g.name, g.degree, g.name);
    }
    let ranks: Vec<String> = stage.rank_table().entries().iter().map(|(d, r)| format!("π{d}: {r}")).collect();
    println!("ranks  {}", ranks.join(", "));
}

#[derive(Serialize)]
pub struct FormRow {
    pub name: String,
    pub rank: usize,
    pub sigma: i64,
    pub b2plus: usize,
    pub b2minus: usize,
    pub connected_sum: (usize, usize),
}

#[derive(Serialize)]
struct Classification<'a> {
    forms: &'a [FormRow],
    equivalent: bool,
}

pub fn print_classification(rows: &[FormRow], equivalent: bool, format: Format) {
    if let Format::Json = format {
        let doc = Classification { forms: rows, equivalent };
        println!("{}", serde_json::to_string_pretty(&doc).expect("classification serializes"));
        return;
    }
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0).max(4);
    println!("{:<width$}  {:>4}  {:>4}  connected sum", "form", "rank", "σ");
    for r in rows {
        let (p, q) = r.connected_sum;
        println!("{:<width$}  {:>4}  {:>4}  #{p} CP² # {q} CP̄²", r.name, r.rank, r.sigma);
    }
    println!("{}", if equivalent { "EQUIVALENT over ℚ" } else { "NOT equivalent over ℚ" });
}
