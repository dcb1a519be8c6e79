use std::collections::{HashMap, HashSet};

use super::{ConstructionScript, Name, Selector, Step, StepKind, TrisectPart};

struct Expander {
    used: HashSet<Name>,
    lines: HashMap<Name, (Name, Name)>,
    out: Vec<Step>,
    provenance: Option<Name>,
}

impl Expander {
    fn fresh(&mut self, base: &str, tag: &str) -> Name {
        let stem = format!("{base}__{tag}");
        let mut name = stem.clone();
        let mut k = 2;
        while self.used.contains(&name) {
            name = format!("{stem}_{k}");
            k += 1;
        }
        self.used.insert(name.clone());
        name
    }

    fn emit(&mut self, output: &str, kind: StepKind) {
        if let StepKind::Line { a, b } = &kind {
            self.lines.insert(output.to_string(), (a.clone(), b.clone()));
        }
        self.out.push(Step {
            output: output.to_string(),
            kind,
            provenance: self.provenance.clone(),
        });
    }

    fn circle(&mut self, out: &str, center: &str, through: &str) {
        self.emit(out, StepKind::Circle { center: center.into(), through: through.into() });
    }

    fn line(&mut self, out: &str, a: &str, b: &str) {
        self.emit(out, StepKind::Line { a: a.into(), b: b.into() });
    }

    fn intersect(&mut self, out: &str, a: &str, b: &str, pick: Option<Selector>) {
        self.emit(out, StepKind::Intersect { a: a.into(), b: b.into(), pick });
    }

    /// The two tips of the vesica on segment `a b`: left of a→b first.
    fn vesica(&mut self, base: &str, a: &str, b: &str) -> (Name, Name) {
        let c1 = self.fresh(base, "c1");
        let c2 = self.fresh(base, "c2");
        let t = self.fresh(base, "t");
        let s = self.fresh(base, "s");
        self.circle(&c1, a, b);
        self.circle(&c2, b, a);
        self.intersect(&t, &c1, &c2, Some(Selector::First));
        self.intersect(&s, &c1, &c2, Some(Selector::Second));
        (t, s)
    }

    fn midpoint(&mut self, out: &str, a: &str, b: &str) {
        let (t, s) = self.vesica(out, a, b);
        let ab = self.fresh(out, "ab");
        let ts = self.fresh(out, "ts");
        self.line(&ab, a, b);
        self.line(&ts, &t, &s);
        self.intersect(out, &ab, &ts, None);
    }

    /// Rhombus a-c-b-d of two equilateral triangles; the median from c to the
    /// midpoint of `b d` (or `a d`) cuts `a b` at its two-thirds (one-third) point.
    fn trisect(&mut self, out: &str, a: &str, b: &str, part: TrisectPart) {
        let (c, d) = self.vesica(out, a, b);
        let m = self.fresh(out, "m");
        match part {
            TrisectPart::Two => self.midpoint(&m, b, &d),
            TrisectPart::One => self.midpoint(&m, a, &d),
        }
        let ab = self.fresh(out, "ab");
        let cm = self.fresh(out, "cm");
        self.line(&ab, a, b);
        self.line(&cm, &c, &m);
        self.intersect(out, &ab, &cm, None);
    }

    /// Perpendicular bisector of the chord that a circle about `p` cuts from `line`.
    fn perpendicular(&mut self, out: &str, p: &str, line: &str) -> Name {
        let (x, y) = self.lines.get(line).cloned().expect("validated line reference");
        let w = if p == x { y } else { x };
        let k = self.fresh(out, "k");
        let w2 = self.fresh(out, "w");
        self.circle(&k, p, &w);
        self.intersect(&w2, line, &k, Some(Selector::Far(w.clone())));
        let (t, s) = self.vesica(out, &w, &w2);
        let ts = self.fresh(out, "ts");
        self.line(&ts, &t, &s);
        ts
    }

    /// Turns `p` by 60 degrees about `c` (clockwise when `ccw` is false).
    fn sixty(&mut self, out: &str, p: &str, c: &str, ccw: bool) -> Name {
        let k = self.fresh(out, "k");
        let j = self.fresh(out, "j");
        self.circle(&k, c, p);
        self.circle(&j, p, c);
        let pick = if ccw { Selector::First } else { Selector::Second };
        self.intersect(out, &k, &j, Some(pick));
        k
    }

    fn rotate(&mut self, out: &str, p: &str, degrees: i32, c: &str) {
        let ccw = degrees > 0;
        let sixties = (degrees / 60).unsigned_abs();
        let half = degrees % 60 != 0;
        let mut current = p.to_string();
        for i in 0..sixties {
            let target = if i + 1 == sixties && !half {
                out.to_string()
            } else {
                self.fresh(out, &format!("r{}", i + 1))
            };
            self.sixty(&target, &current, c, ccw);
            current = target;
        }
        if half {
            let q = self.fresh(out, "q");
            let k = self.sixty(&q, &current, c, ccw);
            let (t, s) = self.vesica(out, &current, &q);
            let ts = self.fresh(out, "ts");
            self.line(&ts, &t, &s);
            self.intersect(out, &ts, &k, Some(Selector::Near(current.clone())));
        }
    }
}

/// Rewrites every macro step into compass and straightedge primitives.
///
/// Helper names are `<output>__<tag>`; the macro's own output keeps its name,
/// and every generated step records the macro output as its provenance.
pub fn expand_macros(script: &ConstructionScript) -> ConstructionScript {
    let mut ex = Expander {
        used: script.steps.iter().map(|s| s.output.clone()).collect(),
        lines: HashMap::new(),
        out: Vec::with_capacity(script.steps.len()),
        provenance: None,
    };
    for step in &script.steps {
        if !step.kind.is_macro() {
            ex.provenance = step.provenance.clone();
            ex.emit(&step.output, step.kind.clone());
            continue;
        }
        ex.provenance = Some(step.provenance.clone().unwrap_or_else(|| step.output.clone()));
        let out = step.output.as_str();
        match &step.kind {
            StepKind::Midpoint { a, b } => ex.midpoint(out, a, b),
            StepKind::Trisect { a, b, part } => ex.trisect(out, a, b, *part),
            StepKind::Perp { point, line } => {
                let ts = ex.perpendicular(out, point, line);
                // The helper line is the answer; re-emit it under the macro's name.
                let (t, s) = ex.lines[&ts].clone();
                ex.out.pop();
                ex.used.remove(&ts);
                ex.line(out, &t, &s);
            }
            StepKind::PerpFoot { point, line } => {
                let ts = ex.perpendicular(out, point, line);
                ex.intersect(out, line, &ts, None);
            }
            StepKind::Rotate { point, degrees, center } => ex.rotate(out, point, *degrees, center),
            _ => unreachable!("primitive handled above"),
        }
    }
    ConstructionScript {
        steps: ex.out,
        rusty: script.rusty,
        polygon: script.polygon.clone(),
    }
}
