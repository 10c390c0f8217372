//! Text format:
//!
//! ```text
//! n=<edge count>
//! <twin array>
//! <next array>
//! <root dart> | origin=<vertex>
//! ```

use std::fmt;
use std::str::FromStr;

use super::{HalfEdgeMap, PointedQuadrangulation, RootedQuadrangulation};
use crate::error::{Error, Result};
use crate::trees::{parse_csv_line, write_csv_line};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marking {
    Root(usize),
    Origin(usize),
}

/// A map with either a root dart or an origin vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedMap {
    pub map: HalfEdgeMap,
    pub marking: Marking,
}

impl MarkedMap {
    pub fn new(map: HalfEdgeMap, marking: Marking) -> Result<Self> {
        let (index, bound) = match marking {
            Marking::Root(d) => (d, map.dart_count()),
            Marking::Origin(v) => (v, map.vertex_count()),
        };
        if index >= bound {
            return Err(Error::IndexOutOfRange { index, max: bound - 1 });
        }
        Ok(MarkedMap { map, marking })
    }

    pub fn into_rooted_quadrangulation(self) -> Result<RootedQuadrangulation> {
        match self.marking {
            Marking::Root(d) => RootedQuadrangulation::new(self.map, d),
            Marking::Origin(_) => Err(Error::Parse("expected a root dart, found an origin".into())),
        }
    }

    pub fn into_pointed_quadrangulation(self) -> Result<PointedQuadrangulation> {
        match self.marking {
            Marking::Origin(v) => PointedQuadrangulation::new(self.map, v),
            Marking::Root(d) => {
                let v = self.map.origin(d);
                PointedQuadrangulation::new(self.map, v)
            }
        }
    }
}

impl From<&RootedQuadrangulation> for MarkedMap {
    fn from(q: &RootedQuadrangulation) -> Self {
        MarkedMap { map: q.map().clone(), marking: Marking::Root(q.root()) }
    }
}

impl From<&PointedQuadrangulation> for MarkedMap {
    fn from(q: &PointedQuadrangulation) -> Self {
        MarkedMap { map: q.map().clone(), marking: Marking::Origin(q.origin()) }
    }
}

impl fmt::Display for MarkedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.map.edge_count())?;
        write_csv_line(f, self.map.twins().iter())?;
        f.write_str("\n")?;
        write_csv_line(f, self.map.nexts().iter())?;
        f.write_str("\n")?;
        match self.marking {
            Marking::Root(d) => writeln!(f, "{d}"),
            Marking::Origin(v) => writeln!(f, "origin={v}"),
        }
    }
}

impl FromStr for MarkedMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let [header, twin, next, mark] = lines[..] else {
            return Err(Error::Parse(format!("expected 4 lines, found {}", lines.len())));
        };
        let edges: usize = header
            .strip_prefix("n=")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
        let map = HalfEdgeMap::new(parse_csv_line(twin)?, parse_csv_line(next)?)?;
        if map.edge_count() != edges {
            return Err(Error::Parse(format!(
                "header says {edges} edges, arrays describe {}",
                map.edge_count()
            )));
        }
        let marking = match mark.strip_prefix("origin=") {
            Some(v) => Marking::Origin(parse_index(v)?),
            None => Marking::Root(parse_index(mark)?),
        };
        MarkedMap::new(map, marking)
    }
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad index `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::path2;
    use super::*;

    #[test]
    fn text_round_trip_is_exact() {
        for marking in [Marking::Root(1), Marking::Origin(2)] {
            let m = MarkedMap::new(path2(), marking).unwrap();
            let text = m.to_string();
            let back: MarkedMap = text.parse().unwrap();
            assert_eq!(back, m);
            assert_eq!(back.to_string(), text);
        }
        assert_eq!(
            MarkedMap::new(path2(), Marking::Root(1)).unwrap().to_string(),
            "n=2\n1,0,3,2\n0,2,1,3\n1\n"
        );
    }

    #[test]
    fn rejects_bad_files() {
        assert!("n=2\n1,0,3,2\n0,2,1,3".parse::<MarkedMap>().is_err());
        assert!("n=3\n1,0,3,2\n0,2,1,3\n0".parse::<MarkedMap>().is_err());
        assert!("n=2\n1,0,3,2\n0,2,1,3\norigin=3".parse::<MarkedMap>().is_err());
        assert!("m=2\n1,0,3,2\n0,2,1,3\n0".parse::<MarkedMap>().is_err());
    }
}
