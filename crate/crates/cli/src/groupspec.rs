//! Group input: catalog names, inline cycle notation and structured files.

use std::fs;

use blockweights::groups::{catalog::catalog, Perm};

use crate::CliError;

fn parse_err(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { pos, msg: msg.into() }
}

/// Generators from a group spec: `sym:4`, `(1,2,3)(4,5); (1,2)` or `file:PATH`.
pub fn parse_group(spec: &str) -> Result<Vec<Perm>, CliError> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        return parse_group_file(&text);
    }
    if let Some(found) = catalog(spec) {
        return Ok(found?);
    }
    if spec.starts_with('(') {
        return parse_cycles(spec, 0);
    }
    Err(CliError::Usage(format!(
        "unknown group `{spec}`: expected a catalog name (sym:n, alt:n, cyclic:n, dihedral:2n, quaternion:8, sl:2:3), \
         cycle notation such as \"(1,2,3);(1,2)\", or file:PATH"
    )))
}

/// Semicolon-separated generators in 1-based disjoint cycle notation. The
/// degree is the largest point mentioned, and at least `min_degree`.
pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Vec<Perm>, CliError> {
    let mut gens: Vec<(usize, Vec<Vec<u32>>)> = Vec::new();
    let mut degree = min_degree;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut start = 0;
    let mut current: Vec<Vec<u32>> = Vec::new();
    let mut seen_any = false;
    while i < chars.len() {
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            ';' => {
                if !seen_any {
                    return Err(parse_err(i + 1, "empty generator"));
                }
                gens.push((start, std::mem::take(&mut current)));
                seen_any = false;
                i += 1;
                start = i;
            }
            '(' => {
                seen_any = true;
                let mut cycle = Vec::new();
                let mut num = String::new();
                let mut num_pos = i + 1;
                i += 1;
                loop {
                    let Some(&c) = chars.get(i) else {
                        return Err(parse_err(i + 1, "unclosed cycle"));
                    };
                    match c {
                        '0'..='9' => {
                            if num.is_empty() {
                                num_pos = i + 1;
                            }
                            num.push(c);
                        }
                        ',' | ')' => {
                            if !num.is_empty() {
                                let x: usize = num.parse().map_err(|_| parse_err(num_pos, "point out of range"))?;
                                if x == 0 {
                                    return Err(parse_err(num_pos, "points are numbered from 1"));
                                }
                                degree = degree.max(x);
                                cycle.push((x - 1) as u32);
                                num.clear();
                            } else if c == ',' || !cycle.is_empty() {
                                return Err(parse_err(i + 1, "missing point"));
                            }
                            if c == ')' {
                                i += 1;
                                break;
                            }
                        }
                        c if c.is_whitespace() => {}
                        other => return Err(parse_err(i + 1, format!("unexpected `{other}`"))),
                    }
                    i += 1;
                }
                if !cycle.is_empty() {
                    current.push(cycle);
                }
            }
            other => return Err(parse_err(i + 1, format!("unexpected `{other}`"))),
        }
    }
    if !seen_any {
        return Err(parse_err(chars.len() + 1, "empty generator"));
    }
    gens.push((start, current));
    let degree = degree.max(1);
    gens.into_iter()
        .map(|(pos, cycles)| {
            Perm::from_cycles(degree, &cycles).map_err(|_| parse_err(pos + 1, "cycles of a generator must be disjoint"))
        })
        .collect()
}

/// The structured format: `degree d`, then one generator per line as
/// comma-separated 1-based images.
pub fn parse_group_file(text: &str) -> Result<Vec<Perm>, CliError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines.next().ok_or_else(|| parse_err(1, "missing `degree d` line"))?;
    let degree: usize = head
        .trim()
        .strip_prefix("degree")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| parse_err(1, "first line must be `degree d`"))?;
    let mut gens = Vec::new();
    for (n, line) in lines {
        let images: Vec<u32> = line
            .split(',')
            .map(|x| x.trim().parse::<u32>().ok().filter(|&v| v >= 1).map(|v| v - 1))
            .collect::<Option<_>>()
            .ok_or_else(|| parse_err(n + 1, "expected comma-separated positive integers"))?;
        if images.len() != degree {
            return Err(parse_err(n + 1, format!("expected {degree} images, found {}", images.len())));
        }
        gens.push(Perm::from_images(images).map_err(|_| parse_err(n + 1, "images do not form a permutation"))?);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(degree));
    }
    Ok(gens)
}

pub fn write_group_file(gens: &[Perm]) -> String {
    let degree = gens.first().map_or(1, Perm::degree);
    let mut out = format!("degree {degree}\n");
    for g in gens {
        let images: Vec<String> = g.images().iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&images.join(","));
        out.push('\n');
    }
    out
}

/// Generators of a subgroup of the group generated by `over`: either
/// `gens:i,j,…` (1-based positions in `over`) or cycle notation on the same points.
pub fn parse_selector(spec: &str, over: &[Perm]) -> Result<Vec<Perm>, CliError> {
    let degree = over.first().map_or(1, Perm::degree);
    if let Some(list) = spec.trim().strip_prefix("gens:") {
        return list
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .ok()
                    .and_then(|i| i.checked_sub(1))
                    .and_then(|i| over.get(i).cloned())
                    .ok_or_else(|| CliError::Usage(format!("`{x}` is not a generator position (1..={})", over.len())))
            })
            .collect();
    }
    let gens = parse_cycles(spec, degree)?;
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(CliError::Usage(format!("subgroup moves points beyond the overgroup degree {degree}")));
    }
    Ok(gens)
}
