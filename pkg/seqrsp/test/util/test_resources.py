"""Class which tests the Resources util class."""
from seqrsp.util.resources import Resources


class TestResources:
    """Class which tests the Resources util class."""

    def test_get_published_tables(self):
        """Test that every table selector is present."""
        tables = Resources.get_published_tables()
        assert set(tables) >= {"I", "II", "III", "IV", "B"}

    def test_sharpness_table_rows(self):
        """Test the rows of the sharpness table of the equatorial circle."""
        rows = Resources.get_published_tables()["I"]["rows"]
        assert [row["i"] for row in rows] == [1, 2, 3, 4, 5, 6]
        assert rows[-1]["lambda_min"] == 0.859

    def test_boundary_table_rows(self):
        """Test that each interval carries two endpoints and two openness flags."""
        for row in Resources.get_published_tables()["IV"]["rows"]:
            for interval in row["intervals"]:
                assert len(interval) == 4
                assert interval[0] <= interval[1]

    def test_cached(self):
        """Test that the resource is read once."""
        assert Resources.get_published_tables() is Resources.get_published_tables()
