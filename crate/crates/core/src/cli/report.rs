//! The machine-readable report and its text and CSV renderings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::AlgebraClass;
use crate::deform::{SemicontinuityReport, SweepRow};
use crate::error::{Error, Result};
use crate::hermitian::{HermitianParams, MetricFlags};
use crate::spectral::TermDims;

#[derive(Clone, Debug, Default, Serialize)]
pub struct MetricsReport {
    pub sg_exists: Option<bool>,
    pub balanced_exists: Option<bool>,
    pub witness: Option<HermitianParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balanced_witness: Option<HermitianParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flags: Option<MetricFlags>,
}

/// Keys shared by `classify`, `cohomology`, `frolicher` and `metrics`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra_class: Option<AlgebraClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equations: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frolicher: Option<BTreeMap<String, TermDims>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub behaviour: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degeneration_step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<MetricsReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivReport {
    pub equivalent: bool,
    pub witness: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Output {
    Report(Report),
    Equiv(EquivReport),
    Sweep(Vec<SweepRow>),
    Semicontinuity(SemicontinuityReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn table(t: &[Vec<usize>]) -> String {
    // rows q = n..0 so the table reads like a diamond in (p, q) coordinates
    let n = t.len();
    let mut s = String::new();
    for q in (0..n).rev() {
        let row: Vec<String> = (0..n).map(|p| format!("{:>3}", t[p][q])).collect();
        s.push_str(&format!("  q={q} |{}\n", row.join("")));
    }
    s.push_str(&format!("        {}\n", (0..n).map(|p| format!("{:>3}", format!("p{p}"))).collect::<String>()));
    s
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

impl Output {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => serde_json::to_string_pretty(self).map_err(|e| Error::Alarm(e.to_string())).map(|s| s + "\n"),
            Format::Text => Ok(self.text()),
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Report(r) => {
                if let Some(c) = r.algebra_class {
                    s.push_str(&format!("algebra: {c}\n"));
                }
                if let Some(t) = &r.triple {
                    s.push_str(&format!("triple: {t}\n"));
                }
                if let Some(e) = &r.equations {
                    s.push_str(&format!("equations: {e}\n"));
                }
                if let Some(h) = &r.hodge {
                    s.push_str("Dolbeault numbers h^{p,q}:\n");
                    s.push_str(&table(h));
                }
                if let Some(b) = &r.betti {
                    s.push_str(&format!("betti: {}\n", b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
                }
                if let Some(f) = &r.frolicher {
                    for (name, t) in f {
                        s.push_str(&format!("{name}:\n{}", table(t)));
                    }
                }
                if let Some(b) = &r.behaviour {
                    s.push_str(&format!("behaviour: {b}\n"));
                }
                if let Some(k) = r.degeneration_step {
                    s.push_str(&format!("degeneration step: {k}\n"));
                }
                if let Some(m) = &r.metrics {
                    if let Some(f) = &m.flags {
                        s.push_str(&format!(
                            "metric: balanced={} gauduchon={} sG={}\n",
                            f.balanced, f.gauduchon, f.strongly_gauduchon
                        ));
                    }
                    s.push_str(&format!("sg-exists: {}\n", yes_no(m.sg_exists)));
                    s.push_str(&format!("balanced-exists: {}\n", yes_no(m.balanced_exists)));
                    if let Some(w) = &m.witness {
                        s.push_str(&format!(
                            "witness: r2={} s2={} t2={} u={} v={} z={}\n",
                            w.r2, w.s2, w.t2, w.u, w.v, w.z
                        ));
                    }
                }
            }
            Output::Equiv(e) => {
                s.push_str(&format!("equivalent: {}\n", e.equivalent));
                if let Some(w) = &e.witness {
                    let parts: Vec<String> = w.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    s.push_str(&format!("witness: {}\n", parts.join(" ")));
                }
            }
            Output::Sweep(rows) => {
                for r in rows {
                    match &r.error {
                        Some(e) => s.push_str(&format!("{}: error: {e}\n", r.parameter)),
                        None => s.push_str(&format!(
                            "{}: {} {} {} sG={} balanced={}\n",
                            r.parameter,
                            r.class.map(|c| c.to_string()).unwrap_or_default(),
                            r.normal_form.clone().unwrap_or_default(),
                            r.behaviour.clone().unwrap_or_default(),
                            yes_no(r.sg_exists),
                            yes_no(r.balanced_exists)
                        )),
                    }
                }
            }
            Output::Semicontinuity(rep) => {
                s.push_str(&format!(
                    "center {} (step {}), nearby {}\n",
                    rep.center,
                    rep.center_step,
                    rep.nearby.iter().zip(&rep.nearby_steps).map(|(p, k)| format!("{p} (step {k})")).collect::<Vec<_>>().join(", ")
                ));
                for c in &rep.cells {
                    let kind = match c.jump {
                        crate::deform::Jump::UpperJump => "upper-jump",
                        crate::deform::Jump::LowerJump => "lower-jump",
                    };
                    s.push_str(&format!("E{}^{{{},{}}}: {} vs {:?} {kind}\n", c.r, c.p, c.q, c.center, c.nearby));
                }
            }
        }
        s
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Alarm(format!("csv: {e}"));
        match self {
            Output::Report(r) => {
                w.write_record(["table", "p", "q", "value"]).map_err(io)?;
                if let Some(h) = &r.hodge {
                    cells(&mut w, "hodge", h)?;
                }
                if let Some(f) = &r.frolicher {
                    for (name, t) in f {
                        cells(&mut w, name, t)?;
                    }
                }
                if let Some(b) = &r.betti {
                    for (k, v) in b.iter().enumerate() {
                        w.write_record(["betti", &k.to_string(), "", &v.to_string()]).map_err(io)?;
                    }
                }
                let mut scalar = |k: &str, v: String| w.write_record([k, "", "", &v]).map_err(io);
                if let Some(c) = r.algebra_class {
                    scalar("algebra_class", c.to_string())?;
                }
                if let Some(t) = &r.triple {
                    scalar("triple", t.clone())?;
                }
                if let Some(b) = &r.behaviour {
                    scalar("behaviour", b.clone())?;
                }
                if let Some(k) = r.degeneration_step {
                    scalar("degeneration_step", k.to_string())?;
                }
                if let Some(m) = &r.metrics {
                    scalar("sg_exists", yes_no(m.sg_exists).into())?;
                    scalar("balanced_exists", yes_no(m.balanced_exists).into())?;
                }
            }
            Output::Equiv(e) => {
                w.write_record(["equivalent"]).map_err(io)?;
                w.write_record([e.equivalent.to_string()]).map_err(io)?;
            }
            Output::Sweep(rows) => {
                w.write_record(["parameter", "class", "normal_form", "behaviour", "step", "sg_exists", "balanced_exists", "error"])
                    .map_err(io)?;
                for r in rows {
                    w.write_record([
                        r.parameter.to_string(),
                        r.class.map(|c| c.to_string()).unwrap_or_default(),
                        r.normal_form.clone().unwrap_or_default(),
                        r.behaviour.clone().unwrap_or_default(),
                        r.step.map(|k| k.to_string()).unwrap_or_default(),
                        r.sg_exists.map(|b| b.to_string()).unwrap_or_default(),
                        r.balanced_exists.map(|b| b.to_string()).unwrap_or_default(),
                        r.error.clone().unwrap_or_default(),
                    ])
                    .map_err(io)?;
                }
            }
            Output::Semicontinuity(rep) => {
                w.write_record(["r", "p", "q", "center", "nearby", "jump"]).map_err(io)?;
                for c in &rep.cells {
                    let nearby = c.nearby.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                    let jump = serde_json::to_value(c.jump).map_err(|e| Error::Alarm(e.to_string()))?;
                    w.write_record([
                        c.r.to_string(),
                        c.p.to_string(),
                        c.q.to_string(),
                        c.center.to_string(),
                        nearby,
                        jump.as_str().unwrap_or_default().to_string(),
                    ])
                    .map_err(io)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Alarm(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Alarm(e.to_string()))
    }
}

fn cells(w: &mut csv::Writer<Vec<u8>>, name: &str, t: &[Vec<usize>]) -> Result<()> {
    for (p, row) in t.iter().enumerate() {
        for (q, v) in row.iter().enumerate() {
            w.write_record([name, &p.to_string(), &q.to_string(), &v.to_string()])
                .map_err(|e| Error::Alarm(format!("csv: {e}")))?;
        }
    }
    Ok(())
}
