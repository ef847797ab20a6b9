COMPLETE { ?x <urn:ex:won> <urn:ex:Oscar> }
