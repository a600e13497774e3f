//! Status strings shown to the user, kept verbatim.

pub const POINT_1_CHOSEN: &str = "point 1 chosen!";
pub const TWO_POINTS: &str = "Two points of intersection!";
pub const ONE_POINT: &str = "One point of intersection!";
pub const NO_INTERSECTION: &str = "No intersection!";
pub const SELECT_NEW_LINE: &str = "Select a new line!";
pub const SELECT_SPHERE: &str = "And now select a sphere!";

/// `point k chosen!` for the k-th selected point (1-based).
pub fn point_chosen(k: usize) -> String {
    format!("point {k} chosen!")
}

/// `Line No. <id> selected.`, with -1 for a miss.
pub fn line_selected(id: Option<usize>) -> String {
    format!("Line No. {} selected.", id.map_or(-1, |i| i as i64))
}

/// `Sphere No. <id> selected.`, with -1 for a miss.
pub fn sphere_selected(id: Option<usize>) -> String {
    format!("Sphere No. {} selected.", id.map_or(-1, |i| i as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verbatim() {
        assert_eq!(point_chosen(1), POINT_1_CHOSEN);
        assert_eq!(line_selected(None), "Line No. -1 selected.");
        assert_eq!(sphere_selected(None), "Sphere No. -1 selected.");
        assert_eq!(line_selected(Some(3)), "Line No. 3 selected.");
    }
}
