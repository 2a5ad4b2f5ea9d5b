import { Component } from '@angular/core';
import { Invoice, Api } from './invoice.model';

@Component({
  selector: 'app-invoice-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class InvoiceDetailComponent {
  current: Invoice | null = null;
  constructor(private api: Api) {}

  parse(raw: string): any {
    return JSON.parse(raw);
  }

  cache = new Map<string, any>();

  toView(x: unknown) {
    return (x as any).name;
  }

}
