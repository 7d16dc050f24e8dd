package printshop.model;

public class Printer extends Device implements Billable {
    private boolean color;
    private int tonerLevel = 100;

    public Printer(String name, boolean color) {
        super(name);
        this.color = color;
    }

    public int costPerPage() {
        if (color) {
            return 25;
        }
        return 5;
    }

    public int bill(String user, int pages) {
        int total = pages * costPerPage();
        if (user == null) {
            throw new IllegalArgumentException("user");
        }
        if (pages > 100 && !color) {
            total = total - total / 10;
        }
        pagesPrinted += pages;
        return total;
    }

    public String currency() {
        return "EUR";
    }

    public String tonerWarning() {
        if (tonerLevel < 10) {
            return "replace toner";
        } else if (tonerLevel < 30) {
            return "toner low";
        } else {
            return "";
        }
    }
}

class Plotter extends Printer {
    private double paperWidth;

    Plotter(String name, double paperWidth) {
        super(name, true);
        this.paperWidth = paperWidth;
    }

    public int costPerPage() {
        return paperWidth > 0.9 ? 120 : 80;
    }
}
