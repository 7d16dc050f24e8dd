package shop;

public class Drawer extends Till {
    public boolean open() {
        return true;
    }
}
