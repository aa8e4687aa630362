package registry;

import java.util.ArrayList;
import java.util.List;

public class HandlerRegistry {

    private List<String> generated = null;

    private final List<String> pending = new ArrayList<String>();

    public List<String> getAll() {
        if (pending.isEmpty()) { throw new IllegalStateException("empty"); }
        generated = new ArrayList<String>(pending);
        return generated;
    }

    public void clear() {
        generated = null;
        pending.clear();
    }

    public void refresh() {
        if (generated == null) {
            getAll();
        }
    }
}
