import { Component, Injectable } from '@angular/core';
import { BaseTicketPageComponent } from './base-ticket-page';

@Component({
  selector: 'app-ticket-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class TicketPageComponent extends BaseTicketPageComponent {
  pageTitle = 'Ticket Page';
}
