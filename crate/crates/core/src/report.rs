//! Integer-exact verification records.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// An ordered list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `expected == actual`.
    pub fn equal<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(name, expected.to_string(), actual.to_string(), pass);
    }

    /// Records `actual >= bound`; the expected column reads `>=bound`.
    pub fn at_least<T: PartialOrd + fmt::Display>(&mut self, name: impl Into<String>, bound: T, actual: T) {
        let pass = actual >= bound;
        self.push(name, format!(">={bound}"), actual.to_string(), pass);
    }

    /// Records `actual <= bound`; the expected column reads `<=bound`.
    pub fn at_most<T: PartialOrd + fmt::Display>(&mut self, name: impl Into<String>, bound: T, actual: T) {
        let pass = actual <= bound;
        self.push(name, format!("<={bound}"), actual.to_string(), pass);
    }

    pub fn holds(&mut self, name: impl Into<String>, value: bool) {
        self.equal(name, true, value);
    }

    pub fn push(&mut self, name: impl Into<String>, expected: String, actual: String, pass: bool) {
        let name: String = name.into();
        self.checks.push(Check {
            name: name.replace(char::is_whitespace, "_"),
            expected,
            actual,
            pass,
        });
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} {} {}",
            self.name,
            self.expected,
            self.actual,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_and_verdicts() {
        let mut r = Report::new();
        r.equal("lrw", 2, 2);
        r.at_least("orbits", 4, 3);
        assert!(!r.passed());
        assert_eq!(r.to_string(), "CHECK lrw 2 2 PASS\nCHECK orbits >=4 3 FAIL\n");
        r.holds("with space", true);
        assert_eq!(r.checks[2].name, "with_space");
    }
}
