# Suite report rendering
