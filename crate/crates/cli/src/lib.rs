//! Command-line front end for the construction engine.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zirkel::numerics::DEFAULT_DIGITS;
use zirkel::trisection::trisect_at;
use zirkel::{
    durer_polygon, execute, is_constructible, parse, report, run_figure_script, to_dms,
    with_digits, FifteenPentagon, FigureId, Point, PointRegistry, Scalar, ThirteenVariant, Variant,
    VertexList,
};

mod svg;
pub use svg::render_svg;

#[derive(Parser, Debug)]
#[command(name = "zirkel", version, about = "Compass-and-straightedge constructions at arbitrary precision")]
pub struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, env = "ZIRKEL_DIGITS", default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Default)]
pub struct VariantArgs {
    /// Edge length reading for thirteen-19 (half, minus-one-thirtysecond, hunrath).
    #[arg(long)]
    pub thirteen: Option<ThirteenVariant>,
    /// Inner pentagon for fifteen-17 (exact, rusty).
    #[arg(long)]
    pub fifteen: Option<FifteenPentagon>,
}

impl VariantArgs {
    fn variant(&self) -> Variant {
        Variant { thirteen: self.thirteen, fifteen: self.fifteen }
    }

    fn is_default(&self) -> bool {
        self.thirteen.is_none() && self.fifteen.is_none()
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a figure's vertices.
    Build {
        figure: String,
        #[command(flatten)]
        variant: VariantArgs,
    },
    /// Execute a .geo script and print every object.
    Run { file: PathBuf },
    /// Compare a figure or a script's polygon against the regular polygon.
    Analyze {
        /// Figure id or path to a .geo file with a `#! polygon` line.
        source: String,
        #[command(flatten)]
        variant: VariantArgs,
    },
    /// Draw a figure or a script's polygon as SVG.
    Render {
        source: String,
        #[command(flatten)]
        variant: VariantArgs,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Draw the circumcircle.
        #[arg(long)]
        circle: bool,
        /// Mark and label the construction's points.
        #[arg(long)]
        construction: bool,
    },
    /// Gauss–Wantzel verdict for the regular n-gon.
    Constructible { n: u64 },
    /// Dürer's approximate trisection of an angle in degrees.
    Trisect {
        #[arg(allow_negative_numbers = true)]
        degrees: String,
        /// Direction of the first arm, in degrees.
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        start: String,
    },
    /// List the figures.
    List,
}

/// Exit code plus what the process writes to its two streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(2, text) } else { Outcome::ok(text) };
        }
    };
    match with_digits(cli.digits, || dispatch(&cli)) {
        Err(e) => Outcome::fail(2, format!("error: {e}\n")),
        Ok(Ok(out)) => Outcome::ok(out),
        Ok(Err(e)) => Outcome::fail(1, format!("error: {e:#}\n")),
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<String> {
    let f = cli.format;
    match &cli.command {
        Command::Build { figure, variant } => {
            let fig: FigureId = figure.parse()?;
            let v = durer_polygon(fig, variant.variant())?;
            Ok(vertices_out(fig.name(), &v, f))
        }
        Command::Run { file } => {
            let reg = run_file(file)?.0;
            Ok(registry_out(&reg, f))
        }
        Command::Analyze { source, variant } => {
            let (label, v) = polygon_source(source, variant)?;
            analyze_out(&label, &v, f)
        }
        Command::Render { source, variant, output, circle, construction } => {
            let (_, v) = polygon_source(source, variant)?;
            let overlay = if *construction { Some(overlay_points(source, variant)?) } else { None };
            let svg = render_svg(&v, *circle, overlay.as_deref());
            match output {
                Some(path) => {
                    std::fs::write(path, &svg).with_context(|| format!("cannot write {}", path.display()))?;
                    Ok(String::new())
                }
                None => Ok(svg),
            }
        }
        Command::Constructible { n } => constructible_out(*n, f),
        Command::Trisect { degrees, start } => trisect_out(degrees, start, f),
        Command::List => Ok(list_out(f)),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn run_file(path: &Path) -> anyhow::Result<(PointRegistry, Option<Vec<String>>)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let script = parse(&text).map_err(|d| anyhow!("{}: {d}", path.display()))?;
    let reg = execute(&script).map_err(|e| anyhow!("{}: {e}", path.display()))?;
    Ok((reg, script.polygon))
}

enum Source {
    Figure(FigureId),
    File(PathBuf),
}

fn classify(source: &str) -> anyhow::Result<Source> {
    if let Ok(fig) = source.parse::<FigureId>() {
        return Ok(Source::Figure(fig));
    }
    let path = PathBuf::from(source);
    if path.exists() {
        Ok(Source::File(path))
    } else {
        bail!("`{source}` is neither a figure id nor an existing file")
    }
}

fn polygon_source(source: &str, variant: &VariantArgs) -> anyhow::Result<(String, VertexList)> {
    match classify(source)? {
        Source::Figure(fig) => Ok((fig.name().to_string(), durer_polygon(fig, variant.variant())?)),
        Source::File(path) => {
            if !variant.is_default() {
                bail!("variant options apply to built-in figures only");
            }
            let (reg, names) = run_file(&path)?;
            let names = names.ok_or_else(|| anyhow!("{} has no `#! polygon` line", path.display()))?;
            let pts = names
                .iter()
                .map(|n| reg.point(n).cloned().ok_or_else(|| anyhow!("`{n}` is not a point")))
                .collect::<anyhow::Result<Vec<Point>>>()?;
            Ok((path.display().to_string(), VertexList::new(pts, false).counterclockwise()))
        }
    }
}

fn overlay_points(source: &str, variant: &VariantArgs) -> anyhow::Result<Vec<(String, Point)>> {
    if !variant.is_default() {
        bail!("--construction is only available for the default variant");
    }
    Ok(match classify(source)? {
        Source::Figure(fig) => {
            let run = run_figure_script(fig)?;
            run.registry.points().map(|(n, p)| (n.clone(), run.transform.apply(p))).collect()
        }
        Source::File(path) => run_file(&path)?.0.points().map(|(n, p)| (n.clone(), p.clone())).collect(),
    })
}

fn vertices_out(label: &str, v: &VertexList, f: Format) -> String {
    match f {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                figure: &'a str,
                n: usize,
                vertices: &'a [Point],
            }
            json(&Out { figure: label, n: v.n(), vertices: &v.vertices })
        }
        Format::Csv => {
            let mut s = String::from("index,x,y\n");
            for (i, p) in v.vertices.iter().enumerate() {
                let _ = writeln!(s, "{},{},{}", i + 1, p.x, p.y);
            }
            s
        }
        Format::Text => {
            let mut s = format!("{label}: {} vertices\n", v.n());
            for (i, p) in v.vertices.iter().enumerate() {
                let _ = writeln!(s, "{:>3}  {p}", i + 1);
            }
            s
        }
    }
}

fn registry_out(reg: &PointRegistry, f: Format) -> String {
    match f {
        Format::Json => json(reg),
        Format::Csv => {
            let mut s = String::from("name,x,y\n");
            for (n, p) in reg.points() {
                let _ = writeln!(s, "{n},{},{}", p.x, p.y);
            }
            s
        }
        Format::Text => reg.to_text(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn analyze_out(label: &str, v: &VertexList, f: Format) -> anyhow::Result<String> {
    let r = report(v)?;
    Ok(match f {
        Format::Json => json(&r),
        Format::Csv => {
            let mut s = String::from("index,side,central_angle,interior_angle\n");
            for i in 0..r.n {
                let _ = writeln!(s, "{},{},{},{}", i + 1, r.sides[i], r.central_angles[i], r.interior_angles[i]);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{label}: {} vertices", r.n);
            let _ = writeln!(s, "concyclic: {}", yes_no(r.concyclic));
            let _ = writeln!(s, "equilateral: {}", yes_no(r.equilateral));
            let _ = writeln!(s, "equiangular: {}", yes_no(r.equiangular));
            let _ = writeln!(s, "max side deviation: {}", r.max_side_dev);
            let _ = writeln!(s, "max angle deviation: {}\"", r.max_angle_dev_arcsec.to_sig_string(12));
            let about = if r.central_about_centroid { "about the centroid" } else { "about the center" };
            let _ = writeln!(s, "side, central angle ({about}), interior angle:");
            for i in 0..r.n {
                let _ = writeln!(s, "{:>3}  {}  {}  {}", i + 1, r.sides[i], r.central_angles[i], r.interior_angles[i]);
            }
            s
        }
    })
}

fn constructible_out(n: u64, f: Format) -> anyhow::Result<String> {
    let v = is_constructible(n)?;
    Ok(match f {
        Format::Json => json(&v),
        Format::Csv => {
            let factors: Vec<String> = v.fermat_factors.iter().map(u64::to_string).collect();
            let obstruction = match v.obstruction {
                Some(zirkel::modern::Obstruction::NonFermatPrime(p)) => format!("non-fermat {p}"),
                Some(zirkel::modern::Obstruction::RepeatedFactor(p)) => format!("repeated {p}"),
                None => String::new(),
            };
            format!(
                "n,constructible,power_of_two,fermat_factors,obstruction\n{},{},{},{},{}\n",
                v.n,
                v.constructible,
                v.power_of_two,
                factors.join(";"),
                obstruction
            )
        }
        Format::Text => format!("{v}\n"),
    })
}

fn trisect_out(degrees: &str, start: &str, f: Format) -> anyhow::Result<String> {
    let theta = Scalar::parse(degrees).map_err(|_| anyhow!("`{degrees}` is not a number"))?;
    let start = Scalar::parse(start).map_err(|_| anyhow!("`{start}` is not a number"))?;
    let t = trisect_at(&theta, &start)?;
    let target = &theta / &Scalar::from(3);
    Ok(match f {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                trace: &'a zirkel::TrisectionTrace,
                theta_out_dms: String,
                target_dms: String,
            }
            json(&Out { trace: &t, theta_out_dms: to_dms(&t.theta_out).to_string(), target_dms: to_dms(&target).to_string() })
        }
        Format::Csv => format!(
            "theta,theta_out,theta_out_dms,target_dms,error_arcsec\n{},{},{},{},{}\n",
            t.theta_in,
            t.theta_out,
            to_dms(&t.theta_out),
            to_dms(&target),
            t.error_arcsec
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "theta:     {}", to_dms(&t.theta_in));
            let _ = writeln!(s, "theta_out: {}", to_dms(&t.theta_out));
            let _ = writeln!(s, "theta/3:   {}", to_dms(&target));
            let _ = writeln!(s, "error:     {}\"", t.error_arcsec.to_sig_string(10));
            for (name, p) in [("A", &t.a), ("B", &t.b), ("D", &t.d), ("H", &t.h), ("K", &t.k), ("X", &t.x)] {
                let _ = writeln!(s, "{name} = {p}");
            }
            s
        }
    })
}

fn list_out(f: Format) -> String {
    let yn = |b: bool| if b { "Y" } else { "N" };
    match f {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                id: &'static str,
                figure: u32,
                sides: usize,
                regular: bool,
            }
            let rows: Vec<Row> = FigureId::ALL
                .iter()
                .map(|f| Row { id: f.name(), figure: f.figure_number(), sides: f.sides(), regular: f.table_regular() })
                .collect();
            json(&rows)
        }
        Format::Csv => {
            let mut s = String::from("id,figure,sides,regular\n");
            for fig in FigureId::ALL {
                let _ = writeln!(s, "{},{},{},{}", fig.name(), fig.figure_number(), fig.sides(), yn(fig.table_regular()));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:<20} {:>6} {:>5}  regular\n", "id", "figure", "sides");
            for fig in FigureId::ALL {
                let _ = writeln!(
                    s,
                    "{:<20} {:>6} {:>5}  {}",
                    fig.name(),
                    fig.figure_number(),
                    fig.sides(),
                    yn(fig.table_regular())
                );
            }
            s
        }
    }
}
