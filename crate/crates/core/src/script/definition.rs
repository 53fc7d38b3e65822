use super::ScriptError;
use crate::ga::{Algebra, GaError};
use crate::qra::qra_generator_names;

/// Contents of a `Definition.csv` file: the generator names and their
/// squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDefinition {
    basis_names: Vec<String>,
    squares: Vec<i32>,
}

impl AlgebraDefinition {
    pub fn new(basis_names: Vec<String>, squares: Vec<i32>) -> Result<Self, ScriptError> {
        let def = Self {
            basis_names,
            squares,
        };
        def.to_algebra()?;
        Ok(def)
    }

    /// The definition GAALOP uses for an `n`-qubit register.
    pub fn qra(n: usize) -> Self {
        let names = qra_generator_names(n);
        let squares = vec![1; names.len()];
        Self {
            basis_names: names,
            squares,
        }
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn square(&self, name: &str) -> Option<i32> {
        self.basis_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.squares[i])
    }

    pub fn to_algebra(&self) -> Result<Algebra, GaError> {
        Algebra::new(&self.squares, &self.basis_names)
    }

    /// Renders the five-line file form.
    pub fn to_csv(&self) -> String {
        let basis = std::iter::once("1")
            .chain(self.basis_names.iter().map(String::as_str))
            .collect::<Vec<_>>()
            .join(",");
        let squares = self
            .basis_names
            .iter()
            .zip(&self.squares)
            .map(|(n, s)| format!("{n}={s}"))
            .collect::<Vec<_>>()
            .join(",");
        format!("{basis}\n\n{basis}\n{squares}\n\n")
    }
}

fn basis_line(line: &str, number: usize) -> Result<Vec<String>, ScriptError> {
    let mut fields = line.split(',').map(str::trim);
    if fields.next() != Some("1") {
        return Err(ScriptError::Definition {
            line: number,
            message: "basis must start with the scalar `1`".into(),
        });
    }
    let names: Vec<String> = fields.map(str::to_owned).collect();
    if names.iter().any(String::is_empty) {
        return Err(ScriptError::Definition {
            line: number,
            message: "empty basis vector name".into(),
        });
    }
    Ok(names)
}

fn parse_square(entry: &str, line: usize) -> Result<(&str, i32), ScriptError> {
    let malformed = || ScriptError::Definition {
        line,
        message: format!("malformed square entry `{entry}`, expected name=1 or name=-1"),
    };
    let (name, value) = entry.split_once('=').ok_or_else(malformed)?;
    let value = match value.trim() {
        "1" | "+1" => 1,
        "-1" => -1,
        _ => return Err(malformed()),
    };
    let name = name.trim();
    if name.is_empty() {
        return Err(malformed());
    }
    Ok((name, value))
}

/// Parses a `Definition.csv`.
///
/// Line 1 lists the used basis, starting with `1`; line 3 the standard basis,
/// which must be identical since basis transformations are not supported.
/// Line 4 assigns each vector its square. Lines 2 and 5 must be blank.
pub fn parse_definition(text: &str) -> Result<AlgebraDefinition, ScriptError> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() < 4 {
        return Err(ScriptError::Definition {
            line: lines.len() + 1,
            message: format!("expected at least 4 lines, found {}", lines.len()),
        });
    }
    for (i, line) in lines.iter().enumerate() {
        if (i == 1 || i >= 4) && !line.trim().is_empty() {
            return Err(ScriptError::Definition {
                line: i + 1,
                message: "basis transformations are not supported; line must be blank".into(),
            });
        }
    }

    let used = basis_line(lines[0], 1)?;
    let standard = basis_line(lines[2], 3)?;
    if used != standard {
        return Err(ScriptError::Definition {
            line: 3,
            message: "standard basis differs from the used basis on line 1; basis transformations are not supported".into(),
        });
    }

    let mut squares: Vec<Option<i32>> = vec![None; used.len()];
    for entry in lines[3].split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (name, value) = parse_square(entry, 4)?;
        let slot = used
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ScriptError::Definition {
                line: 4,
                message: format!("`{name}` is not a basis vector"),
            })?;
        if squares[slot].replace(value).is_some() {
            return Err(ScriptError::Definition {
                line: 4,
                message: format!("square of `{name}` given twice"),
            });
        }
    }
    let squares = used
        .iter()
        .zip(squares)
        .map(|(name, sq)| {
            sq.ok_or_else(|| ScriptError::Definition {
                line: 4,
                message: format!("no square given for `{name}`"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    AlgebraDefinition::new(used, squares)
}
