import { Component } from '@angular/core';
import { Invoice, Api } from './invoice.model';

@Component({
  selector: 'app-invoice-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class InvoiceDetailComponent {
  current: Invoice | null = null;
  constructor(private api: Api) {}

  parse(raw: string): Invoice {
    return JSON.parse(raw) as Invoice;
  }

  cache = new Map<string, Invoice>();

  toView(x: Invoice) {
    return x.name;
  }

}
