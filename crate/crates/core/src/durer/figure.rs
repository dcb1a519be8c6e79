use std::fmt;
use std::str::FromStr;

/// The polygon figures of Dürer's second book, named `<shape>-<figure number>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FigureId {
    Hexagon9,
    Triangle10,
    Heptagon11,
    Fourteen12,
    TwentyEight12,
    Square13,
    Octagon14,
    Sixteen14,
    PentagonExact15,
    Decagon15,
    PentagonRusty16,
    Fifteen17,
    Nine18,
    Eleven19,
    Thirteen19,
}

/// Edge-length readings of the 13-gon construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ThirteenVariant {
    /// Edge 1/2.
    Half,
    /// Edge 1/2 - 1/32.
    MinusOneThirtySecond,
    /// Edge 1/2 - 1/48.
    #[default]
    Hunrath,
}

/// Which pentagon supplies the side used by the 15-gon.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FifteenPentagon {
    #[default]
    Exact,
    Rusty,
}

impl FigureId {
    pub const ALL: [FigureId; 15] = [
        FigureId::Hexagon9,
        FigureId::Triangle10,
        FigureId::Heptagon11,
        FigureId::Fourteen12,
        FigureId::TwentyEight12,
        FigureId::Square13,
        FigureId::Octagon14,
        FigureId::Sixteen14,
        FigureId::PentagonExact15,
        FigureId::Decagon15,
        FigureId::PentagonRusty16,
        FigureId::Fifteen17,
        FigureId::Nine18,
        FigureId::Eleven19,
        FigureId::Thirteen19,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureId::Hexagon9 => "hexagon-9",
            FigureId::Triangle10 => "triangle-10",
            FigureId::Heptagon11 => "heptagon-11",
            FigureId::Fourteen12 => "fourteen-12",
            FigureId::TwentyEight12 => "twentyeight-12",
            FigureId::Square13 => "square-13",
            FigureId::Octagon14 => "octagon-14",
            FigureId::Sixteen14 => "sixteen-14",
            FigureId::PentagonExact15 => "pentagon-exact-15",
            FigureId::Decagon15 => "decagon-15",
            FigureId::PentagonRusty16 => "pentagon-rusty-16",
            FigureId::Fifteen17 => "fifteen-17",
            FigureId::Nine18 => "nine-18",
            FigureId::Eleven19 => "eleven-19",
            FigureId::Thirteen19 => "thirteen-19",
        }
    }

    pub fn figure_number(self) -> u32 {
        match self {
            FigureId::Hexagon9 => 9,
            FigureId::Triangle10 => 10,
            FigureId::Heptagon11 => 11,
            FigureId::Fourteen12 | FigureId::TwentyEight12 => 12,
            FigureId::Square13 => 13,
            FigureId::Octagon14 | FigureId::Sixteen14 => 14,
            FigureId::PentagonExact15 | FigureId::Decagon15 => 15,
            FigureId::PentagonRusty16 => 16,
            FigureId::Fifteen17 => 17,
            FigureId::Nine18 => 18,
            FigureId::Eleven19 | FigureId::Thirteen19 => 19,
        }
    }

    pub fn sides(self) -> usize {
        match self {
            FigureId::Hexagon9 => 6,
            FigureId::Triangle10 => 3,
            FigureId::Heptagon11 => 7,
            FigureId::Fourteen12 => 14,
            FigureId::TwentyEight12 => 28,
            FigureId::Square13 => 4,
            FigureId::Octagon14 => 8,
            FigureId::Sixteen14 => 16,
            FigureId::PentagonExact15 | FigureId::PentagonRusty16 => 5,
            FigureId::Decagon15 => 10,
            FigureId::Fifteen17 => 15,
            FigureId::Nine18 => 9,
            FigureId::Eleven19 => 11,
            FigureId::Thirteen19 => 13,
        }
    }

    /// Whether the default construction yields the regular polygon exactly.
    pub fn exact_regular(self) -> bool {
        matches!(
            self,
            FigureId::Hexagon9
                | FigureId::Triangle10
                | FigureId::Square13
                | FigureId::Octagon14
                | FigureId::Sixteen14
                | FigureId::PentagonExact15
                | FigureId::Decagon15
                | FigureId::Fifteen17
        )
    }

    /// The Regular column of the survey table of Dürer's figures. It marks the
    /// 15-gon as not regular because the figure may be built from the
    /// approximate pentagon.
    pub fn table_regular(self) -> bool {
        self.exact_regular() && self != FigureId::Fifteen17
    }

    /// Source of the shipped construction script.
    pub fn script(self) -> &'static str {
        match self {
            FigureId::Hexagon9 => include_str!("../../corpus/hexagon-9.geo"),
            FigureId::Triangle10 => include_str!("../../corpus/triangle-10.geo"),
            FigureId::Heptagon11 => include_str!("../../corpus/heptagon-11.geo"),
            FigureId::Fourteen12 => include_str!("../../corpus/fourteen-12.geo"),
            FigureId::TwentyEight12 => include_str!("../../corpus/twentyeight-12.geo"),
            FigureId::Square13 => include_str!("../../corpus/square-13.geo"),
            FigureId::Octagon14 => include_str!("../../corpus/octagon-14.geo"),
            FigureId::Sixteen14 => include_str!("../../corpus/sixteen-14.geo"),
            FigureId::PentagonExact15 => include_str!("../../corpus/pentagon-exact-15.geo"),
            FigureId::Decagon15 => include_str!("../../corpus/decagon-15.geo"),
            FigureId::PentagonRusty16 => include_str!("../../corpus/pentagon-rusty-16.geo"),
            FigureId::Fifteen17 => include_str!("../../corpus/fifteen-17.geo"),
            FigureId::Nine18 => include_str!("../../corpus/nine-18.geo"),
            FigureId::Eleven19 => include_str!("../../corpus/eleven-19.geo"),
            FigureId::Thirteen19 => include_str!("../../corpus/thirteen-19.geo"),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {kind} `{value}`")]
pub struct UnknownName {
    pub kind: &'static str,
    pub value: String,
}

impl FromStr for FigureId {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownName { kind: "figure", value: s.to_string() })
    }
}

impl ThirteenVariant {
    pub const ALL: [ThirteenVariant; 3] =
        [ThirteenVariant::Half, ThirteenVariant::MinusOneThirtySecond, ThirteenVariant::Hunrath];

    pub fn name(self) -> &'static str {
        match self {
            ThirteenVariant::Half => "half",
            ThirteenVariant::MinusOneThirtySecond => "minus-one-thirtysecond",
            ThirteenVariant::Hunrath => "hunrath",
        }
    }

    /// Edge length as an exact ratio of the radius.
    pub fn edge_ratio(self) -> (i64, i64) {
        match self {
            ThirteenVariant::Half => (1, 2),
            ThirteenVariant::MinusOneThirtySecond => (15, 32),
            ThirteenVariant::Hunrath => (23, 48),
        }
    }
}

impl FromStr for ThirteenVariant {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ThirteenVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| UnknownName { kind: "13-gon variant", value: s.to_string() })
    }
}

impl FifteenPentagon {
    pub const ALL: [FifteenPentagon; 2] = [FifteenPentagon::Exact, FifteenPentagon::Rusty];

    pub fn name(self) -> &'static str {
        match self {
            FifteenPentagon::Exact => "exact",
            FifteenPentagon::Rusty => "rusty",
        }
    }
}

impl FromStr for FifteenPentagon {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FifteenPentagon::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| UnknownName { kind: "15-gon pentagon", value: s.to_string() })
    }
}
